#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shiftinv/analysis.hpp"
#include "shiftinv/errors.hpp"
#include "shiftinv/group.hpp"
#include "shiftinv/linalg.hpp"
#include "shiftinv/measure.hpp"
#include "shiftinv/report.hpp"
#include "shiftinv/sampling.hpp"

namespace py = pybind11;
using namespace shiftinv;

namespace {

using Residues = std::vector<std::uint64_t>;

py::tuple residues_tuple(const GroupSpec& spec, std::uint64_t index) {
    const auto residues = spec.residues_at(index);
    py::tuple out(residues.size());
    for (std::size_t j = 0; j < residues.size(); ++j) out[j] = residues[j];
    return out;
}

py::list index_list(const GroupSpec& spec, const std::vector<std::uint64_t>& indices) {
    py::list out;
    for (std::uint64_t i : indices) out.append(residues_tuple(spec, i));
    return out;
}

Distribution make_distribution(const GroupSpec& spec,
                               const std::map<Residues, std::string>& probs) {
    std::vector<Rational> table(spec.order(), Rational(0));
    for (const auto& [residues, text] : probs) {
        const GroupElement element = spec.element(residues);
        table[element.index()] += parse_rational(text);
    }
    return Distribution(spec, std::move(table));
}

py::dict probs_dict(const Distribution& dist) {
    py::dict out;
    for (std::uint64_t x : dist.support()) {
        out[residues_tuple(dist.spec(), x)] = format_rational(dist.prob_at(x));
    }
    return out;
}

std::vector<CircleRational> parse_circle_support(const std::vector<std::string>& support) {
    std::vector<CircleRational> out;
    out.reserve(support.size());
    for (const auto& text : support) out.push_back(CircleRational::parse(text));
    return out;
}

py::dict affine_dict(const AffineSubspace& affine) {
    py::dict out;
    py::list particular;
    for (const auto& v : affine.particular) particular.append(format_rational(v));
    py::list directions;
    for (const auto& dir : affine.directions) {
        py::list row;
        for (const auto& v : dir) row.append(format_rational(v));
        directions.append(row);
    }
    out["particular"] = particular;
    out["directions"] = directions;
    out["affine_dimension"] = affine.affine_dimension();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact shift-invariance analysis on finite abelian groups";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SpecMismatchError>(m, "SpecMismatchError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<TheoremViolationError>(m, "TheoremViolationError", PyExc_RuntimeError);

    py::class_<GroupSpec>(m, "Group")
        .def(py::init<std::vector<std::uint64_t>>(), py::arg("cyclic_orders"))
        .def_property_readonly("order", &GroupSpec::order)
        .def_property_readonly("rank", &GroupSpec::rank)
        .def_property_readonly("cyclic_orders",
                               [](const GroupSpec& spec) { return spec.cyclic_orders(); })
        .def("__repr__", [](const GroupSpec& spec) { return "Group(" + spec.describe() + ")"; })
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
        .def("add",
             [](const GroupSpec& spec, const Residues& a, const Residues& b) {
                 const GroupElement sum = spec.element(a) + spec.element(b);
                 return residues_tuple(spec, sum.index());
             })
        .def("negate",
             [](const GroupSpec& spec, const Residues& a) {
                 return residues_tuple(spec, (-spec.element(a)).index());
             })
        .def("elements",
             [](const GroupSpec& spec) {
                 py::list out;
                 for (std::uint64_t i = 0; i < spec.order(); ++i) {
                     out.append(residues_tuple(spec, i));
                 }
                 return out;
             })
        .def("pairing_phase",
             [](const GroupSpec& spec, const Residues& x, const Residues& m) {
                 return format_rational(
                     spec.character(m).phase_at(spec.element(x)).value());
             },
             py::arg("element"), py::arg("character"))
        .def("character_kernel",
             [](const GroupSpec& spec, const Residues& m) {
                 const Subgroup kernel = character_kernel(spec.character(m));
                 return index_list(spec, kernel.element_indices());
             })
        .def("generated_subgroup",
             [](const GroupSpec& spec, const std::vector<Residues>& generators) {
                 std::vector<std::uint64_t> indices;
                 for (const auto& g : generators) indices.push_back(spec.element(g).index());
                 return index_list(spec, generated_subgroup(spec, indices).element_indices());
             })
        .def("coset_partition", [](const GroupSpec& spec, const std::vector<Residues>& subgroup) {
            std::vector<std::uint64_t> indices;
            for (const auto& h : subgroup) indices.push_back(spec.element(h).index());
            py::list out;
            for (const auto& coset : coset_partition(Subgroup(spec, indices))) {
                out.append(index_list(spec, coset));
            }
            return out;
        });

    py::class_<Distribution>(m, "Distribution")
        .def(py::init(&make_distribution), py::arg("group"), py::arg("probs"))
        .def_property_readonly("group", &Distribution::spec)
        .def("probs", &probs_dict)
        .def("support",
             [](const Distribution& dist) { return index_list(dist.spec(), dist.support()); })
        .def("__eq__",
             [](const Distribution& a, const Distribution& b) { return a == b; })
        .def("__repr__", [](const Distribution& dist) {
            return "Distribution(on " + dist.spec().describe() + ")";
        });

    py::class_<FixedPointSpace>(m, "FixedPointSpace")
        .def_property_readonly("dimension", &FixedPointSpace::dimension)
        .def_property_readonly(
            "coset_size", [](const FixedPointSpace& space) { return space.a_subgroup.size(); })
        .def_property_readonly("a_subgroup",
                               [](const FixedPointSpace& space) {
                                   return index_list(space.a_subgroup.spec(),
                                                     space.a_subgroup.element_indices());
                               })
        .def_property_readonly("cosets",
                               [](const FixedPointSpace& space) {
                                   py::list out;
                                   for (const auto& coset : space.cosets) {
                                       out.append(index_list(space.a_subgroup.spec(), coset));
                                   }
                                   return out;
                               })
        .def("lift", [](const FixedPointSpace& space, const std::vector<std::string>& weights) {
            std::vector<Rational> parsed;
            parsed.reserve(weights.size());
            for (const auto& w : weights) parsed.push_back(parse_rational(w));
            return space.lift(parsed);
        });

    m.def("dirac", [](const GroupSpec& spec, const Residues& a) {
        return Distribution::dirac(spec, spec.element(a));
    });
    m.def("uniform", [](const GroupSpec& spec) { return Distribution::uniform(spec); });
    m.def("convolve", &convolve);
    m.def("shift", [](const Distribution& mu, const Residues& a) {
        return shift(mu, mu.spec().element(a));
    });
    m.def("char_table", [](const Distribution& mu) {
        const CharTable table = char_table(mu);
        py::dict out;
        for (std::uint64_t c = 0; c < mu.spec().order(); ++c) {
            out[residues_tuple(mu.spec(), c)] = table.value_at(c);
        }
        return out;
    });
    m.def("char_hat_one_exact", [](const Distribution& mu, const Residues& character) {
        return char_hat_one_exact(mu, mu.spec().character(character));
    });
    m.def("inverse_fourier", [](const Distribution& mu) {
        const auto back = inverse_fourier(char_table(mu));
        py::dict out;
        for (std::uint64_t x = 0; x < mu.spec().order(); ++x) {
            out[residues_tuple(mu.spec(), x)] = back.values[x];
        }
        return out;
    });
    m.def("tv_distance", [](const Distribution& mu, const Distribution& nu) {
        return format_rational(tv_distance(mu, nu));
    });

    m.def("lambda_set", [](const Distribution& mu_y) {
        return index_list(mu_y.spec(), lambda_set(mu_y).character_indices);
    });
    m.def("invariance_subgroup", [](const Distribution& mu_y) {
        return index_list(mu_y.spec(), invariance_subgroup(mu_y).element_indices());
    });
    m.def("stabilizer", [](const Distribution& mu_x) {
        return index_list(mu_x.spec(), stabilizer(mu_x).element_indices());
    });
    m.def("is_fixed_point", &is_fixed_point);
    m.def("verify_forward", [](const Distribution& mu_x, const Distribution& mu_y) {
        const InvarianceAnalysis analysis = verify_forward(mu_x, mu_y);
        py::dict out;
        out["lambda"] = index_list(mu_y.spec(), analysis.lambda.character_indices);
        out["a_subgroup"] = index_list(mu_y.spec(), analysis.a_subgroup.element_indices());
        out["stabilizer"] =
            index_list(mu_x.spec(), analysis.stabilizer_subgroup.element_indices());
        out["haar_forced"] = analysis.haar_forced;
        out["fixed_point_dimension"] = analysis.fixed_point_dimension;
        return out;
    });
    m.def("verify_converse", &verify_converse);
    m.def("fixed_point_space", &fixed_point_space);
    m.def("haar_forced", &haar_forced);
    m.def("independence_check", &independence_check);
    m.def("power_invariance", &power_invariance, py::arg("mu_x"), py::arg("mu_y"), py::arg("n"));
    m.def(
        "circle_classify",
        [](const std::vector<std::string>& support, bool has_nonrational_mass) {
            const CircleClassification result =
                circle_classify(parse_circle_support(support), has_nonrational_mass);
            py::dict out;
            if (result.kind == CircleClassification::Kind::HaarForced) {
                out["kind"] = "haar-forced";
            } else {
                out["kind"] = "finite-cyclic";
                out["modulus"] = result.modulus;
                py::list points;
                for (const auto& point : result.subgroup_points) points.append(point.str());
                out["subgroup_points"] = points;
            }
            return out;
        },
        py::arg("support"), py::arg("has_nonrational_mass") = false);
    m.def("embed_circle_support", [](const std::vector<std::string>& support) {
        return embed_circle_support(parse_circle_support(support));
    });
    m.def("oracle_fixed_points",
          [](const Distribution& mu_y) { return affine_dict(oracle_fixed_points(mu_y)); });

    m.def(
        "sample",
        [](const Distribution& mu, std::uint64_t n, std::uint64_t seed) {
            const EmpiricalTable table = sample_distribution(mu, n, seed);
            py::dict out;
            for (std::uint64_t i = 0; i < table.counts.size(); ++i) {
                if (table.counts[i] > 0) {
                    out[residues_tuple(table.spec, i)] = table.counts[i];
                }
            }
            return out;
        },
        py::arg("mu"), py::arg("n"), py::arg("seed"));
    m.def(
        "empirical_shift_check",
        [](const Distribution& mu_x, const Distribution& mu_y, std::uint64_t n,
           std::uint64_t seed) {
            return format_rational(empirical_shift_check(mu_x, mu_y, n, seed));
        },
        py::arg("mu_x"), py::arg("mu_y"), py::arg("n"), py::arg("seed"));

    m.def("run_request", [](const std::string& text) {
        return run(parse_request(text)).to_json_text();
    });

    m.attr("__version__") = "0.1.0";
}
