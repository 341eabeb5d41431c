#pragma once

#include <cstdint>
#include <vector>

#include "shiftinv/analysis.hpp"
#include "shiftinv/measure.hpp"
#include "shiftinv/rational.hpp"

namespace shiftinv {

/**
 * An affine subspace of Q^n in canonical form: `directions` is the reduced
 * row echelon basis of the direction space and `particular` is the unique
 * point of the subspace with zero coordinates at every pivot column. Two
 * affine subspaces are equal as sets iff their canonical forms compare
 * equal componentwise.
 */
struct AffineSubspace {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> directions;

    std::size_t ambient_dimension() const noexcept { return particular.size(); }
    std::size_t affine_dimension() const noexcept { return directions.size(); }

    bool operator==(const AffineSubspace& other) const = default;
};

/// In-place reduced row echelon form; returns the pivot columns in order.
/// Zero rows are removed.
std::vector<std::size_t> reduced_row_echelon(std::vector<std::vector<Rational>>& rows);

/// Canonicalizes (particular + span(directions)) as described above.
AffineSubspace canonical_affine(std::vector<Rational> particular,
                                std::vector<std::vector<Rational>> directions);

/// Solves rows * x = rhs exactly; returns the full solution set in canonical
/// form. Throws ValidationError when the system is inconsistent.
AffineSubspace solve_affine(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

/// Largest group order the brute-force fixed-point oracle accepts.
inline constexpr std::uint64_t kOracleOrderCap = 64;

/**
 * Brute-force oracle for the solution set of nu * mu_y = nu: exact rational
 * Gaussian elimination on the |G|+1 linear conditions
 *   sum_x nu(x) mu_y(z - x) = nu(z) for every z, and sum_x nu(x) = 1,
 * with no reference to the character-theoretic route. Throws
 * ScaleExceededError above kOracleOrderCap.
 */
AffineSubspace oracle_fixed_points(const Distribution& mu_y);

/// Canonical affine form of the coset-lift solution set, for comparison
/// against the oracle.
AffineSubspace coset_lift_span(const FixedPointSpace& space);

} // namespace shiftinv
