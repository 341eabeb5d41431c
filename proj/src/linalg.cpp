#include "shiftinv/linalg.hpp"

#include <algorithm>

#include "shiftinv/errors.hpp"

namespace shiftinv {

std::vector<std::size_t> reduced_row_echelon(std::vector<std::vector<Rational>>& rows) {
    std::vector<std::size_t> pivot_cols;
    if (rows.empty()) return pivot_cols;
    const std::size_t width = rows.front().size();

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && rows[found][col] == 0) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);

        const Rational inv = Rational(1) / rows[pivot_row][col];
        for (auto& v : rows[pivot_row]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < width; ++c) {
                rows[r][c] -= factor * rows[pivot_row][c];
            }
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return pivot_cols;
}

AffineSubspace canonical_affine(std::vector<Rational> particular,
                                std::vector<std::vector<Rational>> directions) {
    const auto pivots = reduced_row_echelon(directions);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Rational coeff = particular[pivots[r]];
        if (coeff == 0) continue;
        for (std::size_t c = 0; c < particular.size(); ++c) {
            particular[c] -= coeff * directions[r][c];
        }
    }
    return AffineSubspace{std::move(particular), std::move(directions)};
}

AffineSubspace solve_affine(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
    if (rows.size() != rhs.size()) {
        throw ValidationError("solve_affine: row/rhs size mismatch");
    }
    if (rows.empty()) {
        throw ValidationError("solve_affine: empty system");
    }
    const std::size_t unknowns = rows.front().size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r].push_back(rhs[r]);
    }
    const auto pivots = reduced_row_echelon(rows);
    if (!pivots.empty() && pivots.back() == unknowns) {
        throw ValidationError("solve_affine: inconsistent system");
    }

    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t col : pivots) is_pivot[col] = true;

    // Particular solution: free variables zero, pivot variables from the RHS.
    std::vector<Rational> particular(unknowns, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        particular[pivots[r]] = rows[r][unknowns];
    }

    // One direction per free variable.
    std::vector<std::vector<Rational>> directions;
    for (std::size_t col = 0; col < unknowns; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rational> dir(unknowns, Rational(0));
        dir[col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            dir[pivots[r]] = -rows[r][col];
        }
        directions.push_back(std::move(dir));
    }
    return canonical_affine(std::move(particular), std::move(directions));
}

AffineSubspace oracle_fixed_points(const Distribution& mu_y) {
    const GroupSpec& spec = mu_y.spec();
    const std::uint64_t n = spec.order();
    if (n > kOracleOrderCap) {
        throw ScaleExceededError("fixed-point oracle is capped at group order " +
                                 std::to_string(kOracleOrderCap));
    }

    // One balance row per target element z, plus the total-mass row.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    rows.reserve(n + 1);
    for (std::uint64_t z = 0; z < n; ++z) {
        std::vector<Rational> row(n, Rational(0));
        for (std::uint64_t x = 0; x < n; ++x) {
            row[x] = mu_y.prob_at(spec.add_indices(z, spec.negate_index(x)));
        }
        row[z] -= 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    rows.emplace_back(n, Rational(1));
    rhs.emplace_back(1);
    return solve_affine(std::move(rows), std::move(rhs));
}

AffineSubspace coset_lift_span(const FixedPointSpace& space) {
    const GroupSpec& spec = space.a_subgroup.spec();
    const std::uint64_t n = spec.order();
    const Rational per_element(1, space.a_subgroup.size());

    std::vector<Rational> particular(n, Rational(1, n));
    std::vector<std::vector<Rational>> directions;
    for (std::size_t k = 1; k < space.cosets.size(); ++k) {
        std::vector<Rational> dir(n, Rational(0));
        for (std::uint64_t member : space.cosets[k]) dir[member] = per_element;
        for (std::uint64_t member : space.cosets[0]) dir[member] = -per_element;
        directions.push_back(std::move(dir));
    }
    return canonical_affine(std::move(particular), std::move(directions));
}

} // namespace shiftinv
