#pragma once

#include <cstdint>
#include <vector>

#include "shiftinv/group.hpp"
#include "shiftinv/measure.hpp"

namespace shiftinv {

/**
 * The characters at which the characteristic function of mu_Y equals 1
 * exactly. Decided by kernel inclusion (every support element pairs to
 * phase zero), never by comparing complex values against 1.0. The set is
 * the annihilator of a subgroup: it contains the trivial character and is
 * closed under products and inverses.
 */
struct LambdaSet {
    GroupSpec spec;
    std::vector<std::uint64_t> character_indices; // sorted flat indices

    bool contains_index(std::uint64_t character_index) const;
    bool contains(const Character& c) const;
    std::size_t size() const noexcept { return character_indices.size(); }
    std::vector<Character> characters() const;
};

LambdaSet lambda_set(const Distribution& mu_y);

/// A = intersection of the kernels of all LambdaSet characters. Contains
/// the support of mu_y and equals the subgroup the support generates.
Subgroup invariance_subgroup(const Distribution& mu_y);

/// {a : shift(mu_x, a) = mu_x exactly}; always a subgroup containing 0.
Subgroup stabilizer(const Distribution& mu_x);

/// Exact test of convolve(mu_x, mu_y) == mu_x.
bool is_fixed_point(const Distribution& mu_x, const Distribution& mu_y);

/// Everything the forward analysis of a fixed-point pair establishes.
struct InvarianceAnalysis {
    LambdaSet lambda;
    Subgroup a_subgroup;
    Subgroup stabilizer_subgroup;
    bool is_fixed_point = false;
    bool haar_forced = false;
    std::uint64_t fixed_point_dimension = 0; // number of A-cosets, |G| / |A|
};

/**
 * For a fixed-point pair, computes Lambda, A, and the stabilizer, and checks
 * the two guaranteed containments (support(mu_y) within A, A within the
 * stabilizer of mu_x). Throws PreconditionError if the pair is not a fixed
 * point and TheoremViolationError if a containment fails, which can only
 * mean an implementation bug.
 */
InvarianceAnalysis verify_forward(const Distribution& mu_x, const Distribution& mu_y);

/**
 * Converse direction: requires support(mu_y) within stabilizer(mu_x)
 * (PreconditionError otherwise) and then asserts the pair is a fixed point
 * (TheoremViolationError otherwise). Returns true.
 */
bool verify_converse(const Distribution& mu_x, const Distribution& mu_y);

/**
 * The full solution space of nu * mu_y = nu: exactly the distributions
 * constant on each coset of A = invariance_subgroup(mu_y). `lift` maps a
 * distribution over cosets to the element-level fixed point spreading each
 * coset weight uniformly across the coset.
 */
struct FixedPointSpace {
    Subgroup a_subgroup;
    std::vector<std::vector<std::uint64_t>> cosets; // canonical coset order

    std::size_t dimension() const noexcept { return cosets.size(); }
    Distribution lift(const std::vector<Rational>& coset_weights) const;
};

FixedPointSpace fixed_point_space(const Distribution& mu_y);

/// True iff A is the whole group; the unique fixed point is then uniform.
bool haar_forced(const Distribution& mu_y);

/**
 * For a fixed-point pair, checks exactly that the joint law of (X+Y, Y)
 * factorizes: mu_x(b - e) mu_y(e) == (mu_x * mu_y)(b) mu_y(e) over all
 * |G|^2 pairs. PreconditionError when not a fixed point;
 * TheoremViolationError on any mismatch (implementation bug).
 */
bool independence_check(const Distribution& mu_x, const Distribution& mu_y);

/**
 * For a fixed-point pair, checks mu_x * mu_y^{*n} == mu_x with the n-fold
 * convolution computed iteratively and exactly (n = 0 uses the point mass
 * at 0). PreconditionError when not a fixed point; TheoremViolationError
 * if the check fails.
 */
bool power_invariance(const Distribution& mu_x, const Distribution& mu_y, std::uint64_t n);

/**
 * Classification of the shift-invariance structure on the circle for a
 * random shift Y with the given support. If the caller declares mass
 * outside the rationals (or infinite rational support), the only invariant
 * law is uniform on [0,1). Otherwise the support lies in the finite cyclic
 * subgroup {k/N} for N = lcm of the reduced denominators, re-verified
 * minimal by scanning n = 1..N.
 */
struct CircleClassification {
    enum class Kind { FiniteCyclic, HaarForced };

    Kind kind = Kind::HaarForced;
    std::uint64_t modulus = 0;                 // N, when FiniteCyclic
    std::vector<CircleRational> subgroup_points; // {k/N}, when FiniteCyclic
};

/// Enumeration of {k/N} and the minimality scan stay feasible below this.
inline constexpr std::uint64_t kCircleModulusCap = 1000000;

CircleClassification circle_classify(const std::vector<CircleRational>& support,
                                     bool has_nonrational_mass);

/**
 * Embeds a rational circle support into Z_N (N = lcm of denominators,
 * p/q -> p*(N/q)) and returns the uniform distribution on the embedded
 * points. N must stay within the group enumeration cap.
 */
Distribution embed_circle_support(const std::vector<CircleRational>& support);

} // namespace shiftinv
