#pragma once

// Test-only utilities: brute-force oracles written against plain residue
// arithmetic (independent of the library's index machinery) and seeded
// random generators for groups and distributions.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <vector>

#include "shiftinv/group.hpp"
#include "shiftinv/measure.hpp"

namespace testutil {

using shiftinv::Distribution;
using shiftinv::GroupSpec;
using shiftinv::Rational;

// ---------------------------------------------------------------------------
// Independent residue-tuple arithmetic (row-major indexing, plain ints).

inline std::vector<std::uint64_t> tuple_at(const std::vector<std::uint64_t>& orders,
                                           std::uint64_t index) {
    std::vector<std::uint64_t> r(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
        r[j] = index % orders[j];
        index /= orders[j];
    }
    return r;
}

inline std::uint64_t tuple_index(const std::vector<std::uint64_t>& orders,
                                 const std::vector<std::uint64_t>& residues) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) idx = idx * orders[j] + residues[j];
    return idx;
}

inline std::uint64_t group_order(const std::vector<std::uint64_t>& orders) {
    std::uint64_t n = 1;
    for (std::uint64_t o : orders) n *= o;
    return n;
}

inline std::uint64_t add_mod(const std::vector<std::uint64_t>& orders, std::uint64_t a,
                             std::uint64_t b) {
    const auto ra = tuple_at(orders, a);
    const auto rb = tuple_at(orders, b);
    std::vector<std::uint64_t> sum(orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) sum[j] = (ra[j] + rb[j]) % orders[j];
    return tuple_index(orders, sum);
}

inline std::uint64_t neg_mod(const std::vector<std::uint64_t>& orders, std::uint64_t a) {
    auto r = tuple_at(orders, a);
    for (std::size_t j = 0; j < orders.size(); ++j) r[j] = (orders[j] - r[j]) % orders[j];
    return tuple_index(orders, r);
}

/// sum_j m_j x_j / n_j mod 1, straight from the definition.
inline Rational phase_oracle(const std::vector<std::uint64_t>& orders,
                             const std::vector<std::uint64_t>& x,
                             const std::vector<std::uint64_t>& m) {
    Rational sum = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        sum += Rational(m[j] * x[j], orders[j]);
    }
    return shiftinv::mod1(sum);
}

/// Enumeration oracle for a character kernel.
inline std::vector<std::uint64_t> kernel_oracle(const std::vector<std::uint64_t>& orders,
                                                const std::vector<std::uint64_t>& m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < group_order(orders); ++i) {
        if (phase_oracle(orders, tuple_at(orders, i), m) == 0) out.push_back(i);
    }
    return out;
}

/// Breadth-first closure oracle for the generated subgroup.
inline std::vector<std::uint64_t> closure_oracle(const std::vector<std::uint64_t>& orders,
                                                 const std::vector<std::uint64_t>& generators) {
    const std::uint64_t n = group_order(orders);
    std::vector<bool> seen(n, false);
    std::deque<std::uint64_t> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
        const std::uint64_t cur = frontier.front();
        frontier.pop_front();
        for (std::uint64_t g : generators) {
            const std::uint64_t next = add_mod(orders, cur, g);
            if (!seen[next]) {
                seen[next] = true;
                frontier.push_back(next);
            }
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

/// Coset partition oracle (smallest-representative order).
inline std::vector<std::vector<std::uint64_t>> coset_oracle(
    const std::vector<std::uint64_t>& orders, const std::vector<std::uint64_t>& subgroup) {
    const std::uint64_t n = group_order(orders);
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::uint64_t>> cosets;
    for (std::uint64_t rep = 0; rep < n; ++rep) {
        if (assigned[rep]) continue;
        std::vector<std::uint64_t> coset;
        for (std::uint64_t h : subgroup) {
            const std::uint64_t member = add_mod(orders, rep, h);
            assigned[member] = true;
            coset.push_back(member);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

// ---------------------------------------------------------------------------
// Group spec enumeration: every multiset factorization into parts >= 2 for
// each order up to the bound, plus the trivial group.

inline void factorizations_rec(std::uint64_t n, std::uint64_t max_part,
                               std::vector<std::uint64_t>& current,
                               std::vector<std::vector<std::uint64_t>>& out) {
    if (n == 1) {
        if (!current.empty()) out.push_back(current);
        return;
    }
    for (std::uint64_t part = std::min(n, max_part); part >= 2; --part) {
        if (n % part != 0) continue;
        current.push_back(part);
        factorizations_rec(n / part, part, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<std::uint64_t>> all_factorizations(std::uint64_t max_order) {
    std::vector<std::vector<std::uint64_t>> out{{1}};
    for (std::uint64_t n = 2; n <= max_order; ++n) {
        std::vector<std::uint64_t> current;
        factorizations_rec(n, n, current, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random inputs. All weights are small integers so probabilities stay
// "small rationals"; everything is driven by a caller-owned engine.

inline Distribution random_distribution(const GroupSpec& spec, std::mt19937_64& rng,
                                        bool full_support = false) {
    const std::uint64_t n = spec.order();
    std::vector<std::uint64_t> weights(n, 0);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const bool keep = full_support || (rng() % 2 == 0);
        weights[i] = keep ? 1 + rng() % 9 : 0;
        total += weights[i];
    }
    if (total == 0) {
        weights[rng() % n] = 1;
        total = 1;
    }
    std::vector<Rational> probs(n);
    for (std::uint64_t i = 0; i < n; ++i) probs[i] = Rational(weights[i], total);
    return Distribution(spec, std::move(probs));
}

inline Distribution random_distribution_on(const GroupSpec& spec,
                                           const std::vector<std::uint64_t>& support_pool,
                                           std::mt19937_64& rng) {
    std::vector<std::uint64_t> weights(spec.order(), 0);
    std::uint64_t total = 0;
    for (std::uint64_t x : support_pool) {
        if (rng() % 2 == 0) continue;
        weights[x] = 1 + rng() % 9;
        total += weights[x];
    }
    if (total == 0) {
        const std::uint64_t x = support_pool[rng() % support_pool.size()];
        weights[x] = 1;
        total = 1;
    }
    std::vector<Rational> probs(spec.order());
    for (std::uint64_t i = 0; i < spec.order(); ++i) probs[i] = Rational(weights[i], total);
    return Distribution(spec, std::move(probs));
}

/// A pair (mu_x, mu_y) built to satisfy the invariance equation: mu_x is
/// constant on the cosets of a random subgroup H (closure oracle), mu_y is
/// supported inside H. Construction uses only the independent arithmetic.
inline std::pair<Distribution, Distribution> random_invariant_pair(const GroupSpec& spec,
                                                                   std::mt19937_64& rng) {
    const auto& orders = spec.cyclic_orders();
    const std::uint64_t n = spec.order();
    std::vector<std::uint64_t> generators;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t i = 0; i < count; ++i) generators.push_back(rng() % n);
    const auto subgroup = closure_oracle(orders, generators);
    const auto cosets = coset_oracle(orders, subgroup);

    std::vector<std::uint64_t> coset_weights(cosets.size(), 0);
    std::uint64_t total = 0;
    for (auto& w : coset_weights) {
        w = rng() % 10;
        total += w;
    }
    if (total == 0) {
        coset_weights[rng() % cosets.size()] = 1;
        total = 1;
    }
    std::vector<Rational> probs(n, Rational(0));
    for (std::size_t k = 0; k < cosets.size(); ++k) {
        const Rational per(coset_weights[k], total * subgroup.size());
        for (std::uint64_t member : cosets[k]) probs[member] = per;
    }
    return {Distribution(spec, std::move(probs)),
            random_distribution_on(spec, subgroup, rng)};
}

} // namespace testutil
