#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "shiftinv/measure.hpp"

namespace shiftinv {

/**
 * Seeding contract (versioned with the library):
 *  - generator: std::mt19937_64, seeded directly with the stream seed;
 *  - one generator draw per sample, mapped through the exact inverse CDF
 *    over the canonical element order;
 *  - per-variable stream seeds derived from the master seed as
 *    splitmix64(master XOR fnv1a64(label)), labels "X" and "Y".
 */
std::uint64_t splitmix64(std::uint64_t state);
std::uint64_t fnv1a64(std::string_view text);
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view label);

/// Empirical counts from repeated draws; counts are indexed by element
/// flat index and sum to `total`.
struct EmpiricalTable {
    GroupSpec spec;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

/**
 * Draws by inverse CDF: a 64-bit variate u selects the first support
 * element whose cumulative probability exceeds u / 2^64. Cumulative
 * boundaries are exact rationals, precomputed as ceil(F * 2^64) so the
 * selection is a pure integer comparison.
 */
class InverseCdfSampler {
public:
    InverseCdfSampler(const Distribution& mu, std::uint64_t seed);

    /// Flat index of the next draw.
    std::uint64_t draw();

private:
    std::vector<unsigned __int128> thresholds_;
    std::vector<std::uint64_t> support_;
    std::mt19937_64 gen_;
};

/// n independent draws from mu; deterministic per (seed, library version).
EmpiricalTable sample_distribution(const Distribution& mu, std::uint64_t n, std::uint64_t seed);

/// Exact total variation between empirical frequencies and a law.
Rational tv_distance(const EmpiricalTable& empirical, const Distribution& mu);

/**
 * Draws X_i and Y_i from independent streams (sub-seeds derived from the
 * master seed), forms X_i + Y_i, and returns the empirical law of the sum.
 */
EmpiricalTable sample_shifted(const Distribution& mu_x, const Distribution& mu_y,
                              std::uint64_t n, std::uint64_t master_seed);

/// tv(empirical law of X + Y, mu_x), exact.
Rational empirical_shift_check(const Distribution& mu_x, const Distribution& mu_y,
                               std::uint64_t n, std::uint64_t master_seed);

} // namespace shiftinv
