#include "shiftinv/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "shiftinv/errors.hpp"
#include "shiftinv/sampling.hpp"

namespace shiftinv {

using nlohmann::json;

std::string command_name(Command command) {
    switch (command) {
        case Command::Analyze: return "analyze";
        case Command::FixedPoints: return "fixed-points";
        case Command::Independence: return "independence";
        case Command::Sample: return "sample";
        case Command::Circle: return "circle";
    }
    throw ValidationError("unreachable command value");
}

Command parse_command(const std::string& name) {
    if (name == "analyze") return Command::Analyze;
    if (name == "fixed-points") return Command::FixedPoints;
    if (name == "independence") return Command::Independence;
    if (name == "sample") return Command::Sample;
    if (name == "circle") return Command::Circle;
    throw ValidationError("unknown command \"" + name +
                          "\", expected analyze | fixed-points | independence | sample | circle");
}

const Distribution* AnalysisRequest::find_distribution(const std::string& name) const {
    const auto it = distributions.find(name);
    return it == distributions.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

void reject_unknown_fields(const json& object, const std::vector<std::string>& allowed,
                           const std::string& where) {
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ValidationError(where + ": unknown field \"" + item.key() + "\"");
        }
    }
}

std::vector<std::uint64_t> parse_element_key(const std::string& key, const GroupSpec& spec,
                                             const std::string& where) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
        throw ValidationError(where + ": element key \"" + key +
                              "\" must look like \"[a,b,...]\"");
    }
    std::vector<std::uint64_t> residues;
    std::string body = key.substr(1, key.size() - 2);
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
                return std::isdigit(c);
            })) {
            throw ValidationError(where + ": element key \"" + key +
                                  "\" has a non-integer residue");
        }
        residues.push_back(std::stoull(token));
    }
    if (residues.size() != spec.rank()) {
        throw ValidationError(where + ": element key \"" + key + "\" has " +
                              std::to_string(residues.size()) + " residues, expected " +
                              std::to_string(spec.rank()));
    }
    for (std::size_t j = 0; j < residues.size(); ++j) {
        if (residues[j] >= spec.cyclic_orders()[j]) {
            throw ValidationError(where + ": element " + key + " out of range for " +
                                  spec.describe());
        }
    }
    return residues;
}

Distribution parse_distribution(const json& node, const GroupSpec& spec,
                                const std::string& where) {
    if (!node.is_object()) {
        throw ValidationError(where + ": expected an object with a \"probs\" map");
    }
    reject_unknown_fields(node, {"probs"}, where);
    if (!node.contains("probs") || !node["probs"].is_object()) {
        throw ValidationError(where + ": missing \"probs\" map");
    }
    std::vector<Rational> probs(spec.order(), Rational(0));
    for (const auto& item : node["probs"].items()) {
        const auto residues = parse_element_key(item.key(), spec, where + ".probs");
        if (!item.value().is_string()) {
            throw ValidationError(where + ".probs[\"" + item.key() +
                                  "\"]: probability must be a \"p/q\" string");
        }
        const Rational p = parse_rational(item.value().get<std::string>());
        if (p < 0) {
            throw ValidationError(where + ".probs[\"" + item.key() +
                                  "\"]: negative probability");
        }
        probs[spec.index_of(residues)] += p;
    }
    try {
        return Distribution(spec, std::move(probs));
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

std::uint64_t parse_u64_field(const json& node, const std::string& where) {
    if (!node.is_number_unsigned()) {
        throw ValidationError(where + ": expected a nonnegative integer");
    }
    return node.get<std::uint64_t>();
}

} // namespace

AnalysisRequest parse_request(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("request document must be a JSON object");
    }
    reject_unknown_fields(
        doc, {"group", "distributions", "command", "sample_count", "seed", "circle", "oracle"},
        "request");

    AnalysisRequest request;

    if (!doc.contains("command")) {
        throw ValidationError("request: missing \"command\"");
    }
    if (!doc["command"].is_string()) {
        throw ValidationError("request.command: expected a string");
    }
    request.command = parse_command(doc["command"].get<std::string>());

    if (doc.contains("group")) {
        const json& group = doc["group"];
        if (!group.is_object()) {
            throw ValidationError("request.group: expected an object");
        }
        reject_unknown_fields(group, {"cyclic_orders"}, "request.group");
        if (!group.contains("cyclic_orders") || !group["cyclic_orders"].is_array() ||
            group["cyclic_orders"].empty()) {
            throw ValidationError("request.group: \"cyclic_orders\" must be a nonempty array");
        }
        std::vector<std::uint64_t> orders;
        for (const auto& entry : group["cyclic_orders"]) {
            orders.push_back(parse_u64_field(entry, "request.group.cyclic_orders"));
        }
        request.group.emplace(std::move(orders));
    }

    if (doc.contains("distributions")) {
        if (!request.group) {
            throw ValidationError("request: distributions given without a group");
        }
        if (!doc["distributions"].is_object()) {
            throw ValidationError("request.distributions: expected an object");
        }
        for (const auto& item : doc["distributions"].items()) {
            request.distributions.emplace(
                item.key(), parse_distribution(item.value(), *request.group,
                                               "request.distributions." + item.key()));
        }
    }

    if (doc.contains("sample_count")) {
        request.sample_count = parse_u64_field(doc["sample_count"], "request.sample_count");
        if (*request.sample_count == 0) {
            throw ValidationError("request.sample_count: must be >= 1");
        }
    }
    if (doc.contains("seed")) {
        request.seed = parse_u64_field(doc["seed"], "request.seed");
    }
    if (doc.contains("oracle")) {
        if (!doc["oracle"].is_boolean()) {
            throw ValidationError("request.oracle: expected a boolean");
        }
        request.run_oracle = doc["oracle"].get<bool>();
    }

    if (doc.contains("circle")) {
        const json& circle = doc["circle"];
        if (!circle.is_object()) {
            throw ValidationError("request.circle: expected an object");
        }
        reject_unknown_fields(circle, {"support", "has_nonrational_mass"}, "request.circle");
        CircleInput input;
        if (circle.contains("support")) {
            if (!circle["support"].is_array()) {
                throw ValidationError("request.circle.support: expected an array of \"p/q\"");
            }
            for (const auto& entry : circle["support"]) {
                if (!entry.is_string()) {
                    throw ValidationError(
                        "request.circle.support: entries must be \"p/q\" strings");
                }
                input.support.push_back(CircleRational::parse(entry.get<std::string>()));
            }
        }
        if (circle.contains("has_nonrational_mass")) {
            if (!circle["has_nonrational_mass"].is_boolean()) {
                throw ValidationError("request.circle.has_nonrational_mass: expected a boolean");
            }
            input.has_nonrational_mass = circle["has_nonrational_mass"].get<bool>();
        }
        request.circle = std::move(input);
    }

    return request;
}

// ---------------------------------------------------------------------------
// Serialization

std::string element_key(const GroupSpec& spec, std::uint64_t index) {
    const auto residues = spec.residues_at(index);
    std::string out = "[";
    for (std::size_t j = 0; j < residues.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(residues[j]);
    }
    out += ']';
    return out;
}

namespace {

json residues_json(const GroupSpec& spec, std::uint64_t index) {
    return json(spec.residues_at(index));
}

json index_list_json(const GroupSpec& spec, const std::vector<std::uint64_t>& indices) {
    json out = json::array();
    for (std::uint64_t i : indices) out.push_back(residues_json(spec, i));
    return out;
}

json rational_vector_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

json request_json(const AnalysisRequest& request) {
    json out;
    out["command"] = command_name(request.command);
    if (request.group) {
        out["group"] = {{"cyclic_orders", request.group->cyclic_orders()}};
    }
    if (!request.distributions.empty()) {
        json dists;
        for (const auto& [name, dist] : request.distributions) {
            json probs;
            for (std::uint64_t x : dist.support()) {
                probs[element_key(dist.spec(), x)] = format_rational(dist.prob_at(x));
            }
            dists[name] = {{"probs", probs}};
        }
        out["distributions"] = dists;
    }
    if (request.sample_count) out["sample_count"] = *request.sample_count;
    if (request.seed) out["seed"] = *request.seed;
    if (request.run_oracle) out["oracle"] = true;
    if (request.circle) {
        json circle;
        json support = json::array();
        for (const auto& point : request.circle->support) support.push_back(point.str());
        circle["support"] = support;
        circle["has_nonrational_mass"] = request.circle->has_nonrational_mass;
        out["circle"] = circle;
    }
    return out;
}

json report_json(const AnalysisReport& report) {
    json out;
    out["request"] = request_json(report.request);

    const GroupSpec* spec = report.request.group ? &*report.request.group : nullptr;
    if (report.lambda_indices && spec) {
        out["lambda_indices"] = index_list_json(*spec, *report.lambda_indices);
    }
    if (report.a_subgroup) {
        out["a_subgroup"] =
            index_list_json(report.a_subgroup->spec(), report.a_subgroup->element_indices());
    }
    if (report.stabilizer_subgroup) {
        out["stabilizer"] = index_list_json(report.stabilizer_subgroup->spec(),
                                            report.stabilizer_subgroup->element_indices());
    }

    json verdicts;
    if (report.is_fixed_point) verdicts["is_fixed_point"] = *report.is_fixed_point;
    if (report.forward_ok) verdicts["forward_ok"] = *report.forward_ok;
    if (report.converse_ok) verdicts["converse_ok"] = *report.converse_ok;
    if (report.independence_ok) verdicts["independence_ok"] = *report.independence_ok;
    if (report.haar_forced) verdicts["haar_forced"] = *report.haar_forced;
    if (!verdicts.empty()) out["verdicts"] = verdicts;

    if (report.fixed_point_basis && spec) {
        const auto& basis = *report.fixed_point_basis;
        out["fixed_point_basis"] = {{"representatives", index_list_json(*spec, basis.representatives)},
                                    {"coset_size", basis.coset_size},
                                    {"dimension", basis.dimension}};
    }
    if (report.monte_carlo && spec) {
        const auto& mc = *report.monte_carlo;
        json counts;
        for (const auto& [index, count] : mc.counts) {
            counts[element_key(*spec, index)] = count;
        }
        out["monte_carlo"] = {{"sample_count", mc.sample_count},
                              {"seed", mc.seed},
                              {"tv_distance", format_rational(mc.tv)},
                              {"compared_to", mc.compared_to},
                              {"counts", counts}};
    }
    if (report.circle) {
        json circle;
        if (report.circle->classification.kind == CircleClassification::Kind::HaarForced) {
            circle["kind"] = "haar-forced";
        } else {
            circle["kind"] = "finite-cyclic";
            circle["modulus"] = report.circle->classification.modulus;
            json points = json::array();
            for (const auto& point : report.circle->classification.subgroup_points) {
                points.push_back(point.str());
            }
            circle["subgroup_points"] = points;
        }
        if (report.circle->embedding_invariance_ok) {
            circle["embedding_invariance_ok"] = *report.circle->embedding_invariance_ok;
        }
        out["circle"] = circle;
    }
    if (report.oracle) {
        json directions = json::array();
        for (const auto& dir : report.oracle->affine.directions) {
            directions.push_back(rational_vector_json(dir));
        }
        out["oracle"] = {{"particular", rational_vector_json(report.oracle->affine.particular)},
                         {"directions", directions},
                         {"affine_dimension", report.oracle->affine.affine_dimension()},
                         {"matches_lift", report.oracle->matches_lift}};
    }
    if (report.precondition_failure) {
        out["precondition_failure"] = *report.precondition_failure;
    }
    return out;
}

} // namespace

std::string AnalysisReport::to_json_text() const {
    return report_json(*this).dump(2) + "\n";
}

std::string AnalysisReport::to_text() const {
    std::ostringstream out;
    out << "command: " << command_name(request.command) << "\n";
    if (request.group) {
        out << "group: " << request.group->describe() << " (order " << request.group->order()
            << ")\n";
    }
    const GroupSpec* spec = request.group ? &*request.group : nullptr;
    if (lambda_indices && spec) {
        out << "lambda: " << lambda_indices->size() << " characters:";
        for (std::uint64_t c : *lambda_indices) out << " " << element_key(*spec, c);
        out << "\n";
    }
    if (a_subgroup) {
        out << "A: " << a_subgroup->size() << " elements:";
        for (std::uint64_t i : a_subgroup->element_indices()) {
            out << " " << element_key(a_subgroup->spec(), i);
        }
        out << "\n";
    }
    if (stabilizer_subgroup) {
        out << "stabilizer: " << stabilizer_subgroup->size() << " elements:";
        for (std::uint64_t i : stabilizer_subgroup->element_indices()) {
            out << " " << element_key(stabilizer_subgroup->spec(), i);
        }
        out << "\n";
    }
    auto verdict = [&](const char* name, const std::optional<bool>& value) {
        if (value) out << name << ": " << (*value ? "true" : "false") << "\n";
    };
    verdict("is_fixed_point", is_fixed_point);
    verdict("forward_ok", forward_ok);
    verdict("converse_ok", converse_ok);
    verdict("independence_ok", independence_ok);
    verdict("haar_forced", haar_forced);
    if (fixed_point_basis && spec) {
        out << "fixed-point space: " << fixed_point_basis->dimension << " cosets of size "
            << fixed_point_basis->coset_size << ", representatives:";
        for (std::uint64_t r : fixed_point_basis->representatives) {
            out << " " << element_key(*spec, r);
        }
        out << "\n";
    }
    if (monte_carlo) {
        out << "monte carlo: n=" << monte_carlo->sample_count << " seed=" << monte_carlo->seed
            << " tv(empirical, " << monte_carlo->compared_to
            << ")=" << format_rational(monte_carlo->tv) << " ≈ " << to_double(monte_carlo->tv)
            << "\n";
    }
    if (circle) {
        if (circle->classification.kind == CircleClassification::Kind::HaarForced) {
            out << "circle: haar-forced (uniform on [0,1) is the only invariant law)\n";
        } else {
            out << "circle: finite cyclic subgroup of order " << circle->classification.modulus
                << "\n";
        }
        if (circle->embedding_invariance_ok) {
            out << "embedding invariance check: "
                << (*circle->embedding_invariance_ok ? "ok" : "failed") << "\n";
        }
    }
    if (oracle) {
        out << "oracle: affine dimension " << oracle->affine.affine_dimension()
            << ", matches coset lift: " << (oracle->matches_lift ? "true" : "false") << "\n";
    }
    if (precondition_failure) {
        out << "precondition failure: " << *precondition_failure << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Execution

namespace {

const Distribution& require_distribution(const AnalysisRequest& request, const std::string& name) {
    const Distribution* dist = request.find_distribution(name);
    if (!dist) {
        throw ValidationError("command \"" + command_name(request.command) +
                              "\" needs distribution \"" + name + "\"");
    }
    return *dist;
}

void run_analyze(const AnalysisRequest& request, AnalysisReport& report) {
    const Distribution& mu_y = require_distribution(request, "Y");
    const LambdaSet lambda = lambda_set(mu_y);
    const Subgroup a = invariance_subgroup(mu_y);
    report.lambda_indices = lambda.character_indices;
    report.a_subgroup = a;
    report.haar_forced = a.is_whole_group();

    const Distribution* mu_x = request.find_distribution("X");
    if (!mu_x) return;

    const Subgroup stab = stabilizer(*mu_x);
    report.stabilizer_subgroup = stab;
    const bool fixed = is_fixed_point(*mu_x, mu_y);
    report.is_fixed_point = fixed;
    if (fixed) {
        verify_forward(*mu_x, mu_y);
        report.forward_ok = true;
        independence_check(*mu_x, mu_y);
        report.independence_ok = true;
    }
    const auto support = mu_y.support();
    const bool support_in_stabilizer = std::all_of(
        support.begin(), support.end(), [&](std::uint64_t x) { return stab.contains_index(x); });
    if (support_in_stabilizer) {
        report.converse_ok = verify_converse(*mu_x, mu_y);
    }
}

void run_fixed_points(const AnalysisRequest& request, AnalysisReport& report) {
    const Distribution& mu_y = require_distribution(request, "Y");
    const FixedPointSpace space = fixed_point_space(mu_y);

    FixedPointBasisReport basis;
    basis.coset_size = space.a_subgroup.size();
    basis.dimension = space.dimension();
    for (const auto& coset : space.cosets) {
        basis.representatives.push_back(coset.front());
    }
    report.fixed_point_basis = basis;
    report.a_subgroup = space.a_subgroup;
    report.haar_forced = space.a_subgroup.is_whole_group();

    if (request.run_oracle) {
        OracleReport oracle;
        oracle.affine = oracle_fixed_points(mu_y);
        oracle.matches_lift = oracle.affine == coset_lift_span(space);
        if (!oracle.matches_lift) {
            throw TheoremViolationError(
                "fixed-points: oracle affine set disagrees with the coset lift");
        }
        report.oracle = std::move(oracle);
    }
}

void run_independence(const AnalysisRequest& request, AnalysisReport& report) {
    const Distribution& mu_y = require_distribution(request, "Y");
    const Distribution& mu_x = require_distribution(request, "X");
    const bool fixed = is_fixed_point(mu_x, mu_y);
    report.is_fixed_point = fixed;
    report.independence_ok = independence_check(mu_x, mu_y); // throws when not fixed
}

void run_sample(const AnalysisRequest& request, AnalysisReport& report) {
    const Distribution& mu_y = require_distribution(request, "Y");
    if (!request.sample_count) {
        throw ValidationError("sample: missing sample_count (CLI flag --n)");
    }
    if (!request.seed) {
        throw ValidationError("sample: missing seed (CLI flag --seed)");
    }
    const std::uint64_t n = *request.sample_count;
    const std::uint64_t seed = *request.seed;

    MonteCarloReport mc;
    mc.sample_count = n;
    mc.seed = seed;
    const Distribution* mu_x = request.find_distribution("X");
    EmpiricalTable table =
        mu_x ? sample_shifted(*mu_x, mu_y, n, seed)
             : sample_distribution(mu_y, n, derive_stream_seed(seed, "Y"));
    mc.compared_to = mu_x ? "X" : "Y";
    mc.tv = tv_distance(table, mu_x ? *mu_x : mu_y);
    for (std::uint64_t i = 0; i < table.counts.size(); ++i) {
        if (table.counts[i] > 0) mc.counts.emplace_back(i, table.counts[i]);
    }
    report.monte_carlo = std::move(mc);
}

void run_circle(const AnalysisRequest& request, AnalysisReport& report) {
    if (!request.circle) {
        throw ValidationError("circle: missing support (CLI flag --support or --nonrational)");
    }
    CircleReport circle;
    circle.classification =
        circle_classify(request.circle->support, request.circle->has_nonrational_mass);
    if (circle.classification.kind == CircleClassification::Kind::FiniteCyclic &&
        circle.classification.modulus <= GroupSpec::kDefaultOrderCap) {
        const Distribution embedded = embed_circle_support(request.circle->support);
        if (!invariance_subgroup(embedded).is_whole_group()) {
            throw TheoremViolationError(
                "circle: embedded support fails to force invariance on the cyclic group");
        }
        circle.embedding_invariance_ok = true;
    }
    report.circle = std::move(circle);
}

} // namespace

AnalysisReport run(const AnalysisRequest& request) {
    AnalysisReport report;
    report.request = request;
    try {
        switch (request.command) {
            case Command::Analyze: run_analyze(request, report); break;
            case Command::FixedPoints: run_fixed_points(request, report); break;
            case Command::Independence: run_independence(request, report); break;
            case Command::Sample: run_sample(request, report); break;
            case Command::Circle: run_circle(request, report); break;
        }
    } catch (const PreconditionError& e) {
        report.precondition_failure = e.what();
    }
    return report;
}

} // namespace shiftinv
