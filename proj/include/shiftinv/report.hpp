#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftinv/analysis.hpp"
#include "shiftinv/group.hpp"
#include "shiftinv/linalg.hpp"
#include "shiftinv/measure.hpp"

namespace shiftinv {

enum class Command { Analyze, FixedPoints, Independence, Sample, Circle };

std::string command_name(Command command);
Command parse_command(const std::string& name);

struct CircleInput {
    std::vector<CircleRational> support;
    bool has_nonrational_mass = false;
};

/**
 * One self-describing request document. Distributions are named ("Y" drives
 * the shift, "X" is the candidate invariant law); rationals come in as
 * "p/q" strings and elements as "[a,b,...]" residue keys.
 */
struct AnalysisRequest {
    std::optional<GroupSpec> group;
    std::map<std::string, Distribution> distributions;
    Command command = Command::Analyze;
    std::optional<std::uint64_t> sample_count;
    std::optional<std::uint64_t> seed;
    std::optional<CircleInput> circle;
    bool run_oracle = false;

    const Distribution* find_distribution(const std::string& name) const;
};

/// Parses and validates a JSON request document. Every failure carries a
/// field diagnostic. Unknown fields are rejected.
AnalysisRequest parse_request(const std::string& text);

/// Canonical element map key, e.g. "[1,2]".
std::string element_key(const GroupSpec& spec, std::uint64_t index);

struct FixedPointBasisReport {
    std::vector<std::uint64_t> representatives; // flat indices, one per coset
    std::uint64_t coset_size = 0;
    std::uint64_t dimension = 0;
};

struct MonteCarloReport {
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    Rational tv;
    std::string compared_to; // name of the exact law the empirical table is held against
    std::vector<std::pair<std::uint64_t, std::uint64_t>> counts; // (element index, count), count > 0
};

struct OracleReport {
    AffineSubspace affine;
    bool matches_lift = false;
};

struct CircleReport {
    CircleClassification classification;
    std::optional<bool> embedding_invariance_ok; // present when the modulus fits the group cap
};

/**
 * Serializable outcome of a run. Optional sections are present exactly when
 * their inputs and preconditions were available; serialization is canonical
 * (sorted keys, reduced rationals), so identical requests produce
 * byte-identical reports.
 */
struct AnalysisReport {
    AnalysisRequest request;

    std::optional<std::vector<std::uint64_t>> lambda_indices; // character flat indices
    std::optional<Subgroup> a_subgroup;
    std::optional<Subgroup> stabilizer_subgroup;

    std::optional<bool> is_fixed_point;
    std::optional<bool> forward_ok;
    std::optional<bool> converse_ok;
    std::optional<bool> independence_ok;
    std::optional<bool> haar_forced;

    std::optional<FixedPointBasisReport> fixed_point_basis;
    std::optional<MonteCarloReport> monte_carlo;
    std::optional<CircleReport> circle;
    std::optional<OracleReport> oracle;

    std::optional<std::string> precondition_failure;

    std::string to_json_text() const;
    std::string to_text() const;
};

/**
 * Executes a validated request. PreconditionError from the dispatched
 * operations is reported in-band (precondition_failure); ValidationError
 * and TheoremViolationError propagate to the caller.
 */
AnalysisReport run(const AnalysisRequest& request);

} // namespace shiftinv
