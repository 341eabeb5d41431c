#include "shiftinv/sampling.hpp"

#include <algorithm>

#include "shiftinv/errors.hpp"

namespace shiftinv {

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view label) {
    return splitmix64(master_seed ^ fnv1a64(label));
}

InverseCdfSampler::InverseCdfSampler(const Distribution& mu, std::uint64_t seed) : gen_(seed) {
    const Int two64 = Int(1) << 64;
    Rational cumulative = 0;
    for (std::uint64_t x : mu.support()) {
        cumulative += mu.prob_at(x);
        // ceil(cumulative * 2^64); the last boundary is exactly 2^64, which
        // every 64-bit variate is below.
        const Int scaled_num = numerator(cumulative) * two64;
        const Int den = denominator(cumulative);
        const Int threshold = (scaled_num + den - 1) / den;
        thresholds_.push_back(threshold.convert_to<unsigned __int128>());
        support_.push_back(x);
    }
}

std::uint64_t InverseCdfSampler::draw() {
    const unsigned __int128 u = gen_();
    const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
    return support_[static_cast<std::size_t>(it - thresholds_.begin())];
}

EmpiricalTable sample_distribution(const Distribution& mu, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ValidationError("sample count must be >= 1");
    }
    InverseCdfSampler sampler(mu, seed);
    EmpiricalTable table{mu.spec(), std::vector<std::uint64_t>(mu.spec().order(), 0), n};
    for (std::uint64_t i = 0; i < n; ++i) {
        ++table.counts[sampler.draw()];
    }
    return table;
}

Rational tv_distance(const EmpiricalTable& empirical, const Distribution& mu) {
    detail::require_same_spec(empirical.spec, mu.spec(), "tv_distance");
    Rational total = 0;
    for (std::uint64_t i = 0; i < mu.spec().order(); ++i) {
        total += abs(Rational(empirical.counts[i], empirical.total) - mu.prob_at(i));
    }
    return total / 2;
}

EmpiricalTable sample_shifted(const Distribution& mu_x, const Distribution& mu_y,
                              std::uint64_t n, std::uint64_t master_seed) {
    detail::require_same_spec(mu_x.spec(), mu_y.spec(), "sample_shifted");
    if (n == 0) {
        throw ValidationError("sample count must be >= 1");
    }
    const GroupSpec& spec = mu_x.spec();
    InverseCdfSampler x_stream(mu_x, derive_stream_seed(master_seed, "X"));
    InverseCdfSampler y_stream(mu_y, derive_stream_seed(master_seed, "Y"));
    EmpiricalTable table{spec, std::vector<std::uint64_t>(spec.order(), 0), n};
    for (std::uint64_t i = 0; i < n; ++i) {
        ++table.counts[spec.add_indices(x_stream.draw(), y_stream.draw())];
    }
    return table;
}

Rational empirical_shift_check(const Distribution& mu_x, const Distribution& mu_y,
                               std::uint64_t n, std::uint64_t master_seed) {
    return tv_distance(sample_shifted(mu_x, mu_y, n, master_seed), mu_x);
}

} // namespace shiftinv
