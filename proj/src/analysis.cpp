#include "shiftinv/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "shiftinv/errors.hpp"

namespace shiftinv {

namespace {

bool support_within(const Distribution& mu, const Subgroup& s) {
    const auto support = mu.support();
    return std::all_of(support.begin(), support.end(),
                       [&](std::uint64_t x) { return s.contains_index(x); });
}

void require_fixed_point(const Distribution& mu_x, const Distribution& mu_y,
                         const char* operation) {
    if (!is_fixed_point(mu_x, mu_y)) {
        throw PreconditionError(std::string(operation) +
                                ": pair is not a fixed point (convolve(X, Y) != X)");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// LambdaSet

bool LambdaSet::contains_index(std::uint64_t character_index) const {
    return std::binary_search(character_indices.begin(), character_indices.end(),
                              character_index);
}

bool LambdaSet::contains(const Character& c) const {
    detail::require_same_spec(spec, c.spec(), "lambda membership");
    return contains_index(c.index());
}

std::vector<Character> LambdaSet::characters() const {
    std::vector<Character> out;
    out.reserve(character_indices.size());
    for (std::uint64_t c : character_indices) {
        out.push_back(spec.character_at(c));
    }
    return out;
}

LambdaSet lambda_set(const Distribution& mu_y) {
    const GroupSpec& spec = mu_y.spec();
    const auto support = mu_y.support();
    std::vector<GroupElement> support_elems;
    support_elems.reserve(support.size());
    for (std::uint64_t x : support) {
        support_elems.push_back(spec.element_at(x));
    }
    std::vector<std::uint64_t> lambda;
    for (std::uint64_t c = 0; c < spec.order(); ++c) {
        const Character gamma = spec.character_at(c);
        bool all_zero = true;
        for (const auto& x : support_elems) {
            if (!gamma.phase_at(x).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) lambda.push_back(c);
    }
    return LambdaSet{spec, std::move(lambda)};
}

// ---------------------------------------------------------------------------
// Subgroup-level analysis

Subgroup invariance_subgroup(const Distribution& mu_y) {
    const GroupSpec& spec = mu_y.spec();
    const LambdaSet lambda = lambda_set(mu_y);
    std::vector<Character> gammas = lambda.characters();
    std::vector<std::uint64_t> members;
    for (std::uint64_t y = 0; y < spec.order(); ++y) {
        const GroupElement elem = spec.element_at(y);
        bool in_all_kernels = true;
        for (const auto& gamma : gammas) {
            if (!gamma.phase_at(elem).is_zero()) {
                in_all_kernels = false;
                break;
            }
        }
        if (in_all_kernels) members.push_back(y);
    }
    return Subgroup(spec, std::move(members));
}

Subgroup stabilizer(const Distribution& mu_x) {
    const GroupSpec& spec = mu_x.spec();
    std::vector<std::uint64_t> members;
    for (std::uint64_t a = 0; a < spec.order(); ++a) {
        bool invariant = true;
        for (std::uint64_t x = 0; x < spec.order(); ++x) {
            if (mu_x.prob_at(spec.add_indices(x, a)) != mu_x.prob_at(x)) {
                invariant = false;
                break;
            }
        }
        if (invariant) members.push_back(a);
    }
    return Subgroup(spec, std::move(members));
}

bool is_fixed_point(const Distribution& mu_x, const Distribution& mu_y) {
    detail::require_same_spec(mu_x.spec(), mu_y.spec(), "is_fixed_point");
    return convolve(mu_x, mu_y) == mu_x;
}

InvarianceAnalysis verify_forward(const Distribution& mu_x, const Distribution& mu_y) {
    require_fixed_point(mu_x, mu_y, "verify_forward");

    InvarianceAnalysis out{lambda_set(mu_y), invariance_subgroup(mu_y), stabilizer(mu_x),
                           true, false, 0};
    if (!support_within(mu_y, out.a_subgroup)) {
        throw TheoremViolationError(
            "verify_forward: support of Y escapes the invariance subgroup A");
    }
    for (std::uint64_t a : out.a_subgroup.element_indices()) {
        if (!out.stabilizer_subgroup.contains_index(a)) {
            throw TheoremViolationError(
                "verify_forward: invariance subgroup A is not contained in the stabilizer of X");
        }
    }
    out.haar_forced = out.a_subgroup.is_whole_group();
    out.fixed_point_dimension = mu_x.spec().order() / out.a_subgroup.size();
    return out;
}

bool verify_converse(const Distribution& mu_x, const Distribution& mu_y) {
    detail::require_same_spec(mu_x.spec(), mu_y.spec(), "verify_converse");
    if (!support_within(mu_y, stabilizer(mu_x))) {
        throw PreconditionError(
            "verify_converse: support of Y is not contained in the stabilizer of X");
    }
    if (!is_fixed_point(mu_x, mu_y)) {
        throw TheoremViolationError(
            "verify_converse: stabilizer-supported Y failed to leave X invariant");
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fixed-point space

Distribution FixedPointSpace::lift(const std::vector<Rational>& coset_weights) const {
    if (coset_weights.size() != cosets.size()) {
        throw ValidationError("lift expects one weight per coset (" +
                              std::to_string(cosets.size()) + "), got " +
                              std::to_string(coset_weights.size()));
    }
    const GroupSpec& spec = a_subgroup.spec();
    const Rational coset_size(a_subgroup.size());
    std::vector<Rational> probs(spec.order(), Rational(0));
    for (std::size_t k = 0; k < cosets.size(); ++k) {
        if (coset_weights[k] < 0) {
            throw ValidationError("lift weight must be nonnegative");
        }
        const Rational per_element = coset_weights[k] / coset_size;
        for (std::uint64_t member : cosets[k]) {
            probs[member] = per_element;
        }
    }
    return Distribution(spec, std::move(probs)); // re-validates total mass
}

FixedPointSpace fixed_point_space(const Distribution& mu_y) {
    Subgroup a = invariance_subgroup(mu_y);
    auto cosets = coset_partition(a);
    return FixedPointSpace{std::move(a), std::move(cosets)};
}

bool haar_forced(const Distribution& mu_y) {
    return invariance_subgroup(mu_y).is_whole_group();
}

// ---------------------------------------------------------------------------
// Consequence checks

bool independence_check(const Distribution& mu_x, const Distribution& mu_y) {
    require_fixed_point(mu_x, mu_y, "independence_check");
    const GroupSpec& spec = mu_x.spec();
    const Distribution sum_law = convolve(mu_x, mu_y);
    for (std::uint64_t b = 0; b < spec.order(); ++b) {
        for (std::uint64_t e = 0; e < spec.order(); ++e) {
            const Rational joint =
                mu_x.prob_at(spec.add_indices(b, spec.negate_index(e))) * mu_y.prob_at(e);
            const Rational product = sum_law.prob_at(b) * mu_y.prob_at(e);
            if (joint != product) {
                throw TheoremViolationError(
                    "independence_check: joint law of (X+Y, Y) does not factorize");
            }
        }
    }
    return true;
}

bool power_invariance(const Distribution& mu_x, const Distribution& mu_y, std::uint64_t n) {
    require_fixed_point(mu_x, mu_y, "power_invariance");
    const GroupSpec& spec = mu_x.spec();
    Distribution power = Distribution::dirac(spec, spec.zero());
    for (std::uint64_t i = 0; i < n; ++i) {
        power = convolve(power, mu_y);
    }
    if (convolve(mu_x, power) != mu_x) {
        throw TheoremViolationError("power_invariance: X + " + std::to_string(n) +
                                    "Y changed the law of X");
    }
    return true;
}

// ---------------------------------------------------------------------------
// Circle classification

CircleClassification circle_classify(const std::vector<CircleRational>& support,
                                     bool has_nonrational_mass) {
    if (has_nonrational_mass) {
        return CircleClassification{CircleClassification::Kind::HaarForced, 0, {}};
    }
    if (support.empty()) {
        throw ValidationError(
            "circle support must be nonempty unless nonrational mass is declared");
    }

    Int modulus = 1;
    std::vector<std::uint64_t> denominators;
    denominators.reserve(support.size());
    for (const auto& point : support) {
        modulus = lcm(modulus, point.denominator());
        if (modulus > kCircleModulusCap) {
            throw ScaleExceededError("circle subgroup modulus exceeds enumeration cap " +
                                     std::to_string(kCircleModulusCap));
        }
        denominators.push_back(point.denominator().convert_to<std::uint64_t>());
    }
    const std::uint64_t n = modulus.convert_to<std::uint64_t>();

    // Minimality rescan: no smaller m may hold the whole support.
    for (std::uint64_t m = 1; m < n; ++m) {
        bool holds_all = true;
        for (std::uint64_t q : denominators) {
            if (m % q != 0) {
                holds_all = false;
                break;
            }
        }
        if (holds_all) {
            throw TheoremViolationError("circle_classify: modulus " + std::to_string(n) +
                                        " is not minimal, " + std::to_string(m) + " suffices");
        }
    }

    CircleClassification out;
    out.kind = CircleClassification::Kind::FiniteCyclic;
    out.modulus = n;
    out.subgroup_points.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        out.subgroup_points.emplace_back(Rational(k, n));
    }
    return out;
}

Distribution embed_circle_support(const std::vector<CircleRational>& support) {
    if (support.empty()) {
        throw ValidationError("cannot embed an empty circle support");
    }
    Int modulus = 1;
    for (const auto& point : support) {
        modulus = lcm(modulus, point.denominator());
        if (modulus > GroupSpec::kDefaultOrderCap) {
            throw ScaleExceededError("embedded circle group would exceed the group order cap");
        }
    }
    const std::uint64_t n = modulus.convert_to<std::uint64_t>();
    const GroupSpec spec({n});
    // p/q -> p * (N/q), uniform mass over the distinct embedded points
    std::vector<std::uint64_t> points;
    for (const auto& point : support) {
        const Int embedded = point.numerator() * (Int(n) / point.denominator());
        points.push_back(embedded.convert_to<std::uint64_t>());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Rational> probs(n, Rational(0));
    for (std::uint64_t p : points) {
        probs[p] = Rational(1, points.size());
    }
    return Distribution(spec, std::move(probs));
}

} // namespace shiftinv
