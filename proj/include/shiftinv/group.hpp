#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "shiftinv/rational.hpp"

namespace shiftinv {

class GroupElement;
class Character;

/**
 * A finite abelian group presented as a product of cyclic groups
 * Z_{n_1} x ... x Z_{n_k}. Elements are residue tuples; the canonical
 * enumeration order is lexicographic on residues, which coincides with the
 * mixed-radix ("flat") index used throughout the library.
 */
class GroupSpec {
public:
    /// Explicit enumeration stays feasible below this bound.
    static constexpr std::uint64_t kDefaultOrderCap = 10000;

    explicit GroupSpec(std::vector<std::uint64_t> cyclic_orders,
                       std::uint64_t order_cap = kDefaultOrderCap);

    std::size_t rank() const noexcept { return orders_.size(); }
    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint64_t>& cyclic_orders() const noexcept { return orders_; }

    bool operator==(const GroupSpec& other) const noexcept { return orders_ == other.orders_; }
    bool operator!=(const GroupSpec& other) const noexcept { return !(*this == other); }

    /// Mixed-radix index of a residue tuple (row-major, first factor most
    /// significant). Residues must already be canonical.
    std::uint64_t index_of(const std::vector<std::uint64_t>& residues) const;
    std::vector<std::uint64_t> residues_at(std::uint64_t index) const;

    GroupElement element(std::vector<std::uint64_t> residues) const;
    GroupElement element_at(std::uint64_t index) const;
    GroupElement zero() const;

    Character character(std::vector<std::uint64_t> indices) const;
    Character character_at(std::uint64_t index) const;

    std::uint64_t add_indices(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t negate_index(std::uint64_t a) const;

    /// "Z_2 x Z_3" style, for diagnostics.
    std::string describe() const;

private:
    std::vector<std::uint64_t> orders_;
    std::uint64_t order_ = 1;
};

/// An element of a GroupSpec: a canonical residue tuple bound to its group.
class GroupElement {
public:
    GroupElement(GroupSpec spec, std::vector<std::uint64_t> residues);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
    std::uint64_t index() const { return spec_.index_of(residues_); }
    bool is_zero() const;

    GroupElement operator-() const;
    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);

    bool operator==(const GroupElement& other) const;
    bool operator!=(const GroupElement& other) const { return !(*this == other); }
    /// Lexicographic on residues; only meaningful within one spec.
    bool operator<(const GroupElement& other) const;

private:
    GroupSpec spec_;
    std::vector<std::uint64_t> residues_;
};

/// The value of a character at an element, as an exact rational phase in
/// [0, 1): the complex value is exp(2*pi*i*phase). Phase 0 is exactly the
/// value 1, so "character equals 1" is decidable with no tolerance.
class RationalPhase {
public:
    RationalPhase() = default;
    explicit RationalPhase(const Rational& r) : value_(mod1(r)) {}

    const Rational& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    std::complex<double> unit_value() const;

    RationalPhase operator+(const RationalPhase& other) const {
        return RationalPhase(value_ + other.value_);
    }
    bool operator==(const RationalPhase& other) const { return value_ == other.value_; }
    bool operator!=(const RationalPhase& other) const { return !(*this == other); }

private:
    Rational value_ = 0;
};

/**
 * A character of a GroupSpec, identified by an index tuple (m_1..m_k) with
 * 0 <= m_j < n_j. Its value at x is exp(2*pi*i * sum_j m_j x_j / n_j); the
 * dual group multiplies pointwise, which adds index tuples componentwise.
 */
class Character {
public:
    Character(GroupSpec spec, std::vector<std::uint64_t> indices);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }
    std::uint64_t index() const { return spec_.index_of(indices_); }
    bool is_trivial() const;

    RationalPhase phase_at(const GroupElement& x) const;
    std::complex<double> value_at(const GroupElement& x) const;

    /// Order of the character in the dual group.
    std::uint64_t order() const;

    Character inverse() const;
    friend Character operator*(const Character& a, const Character& b);

    bool operator==(const Character& other) const;
    bool operator!=(const Character& other) const { return !(*this == other); }

private:
    GroupSpec spec_;
    std::vector<std::uint64_t> indices_;
};

RationalPhase pairing_phase(const GroupElement& x, const Character& c);

/**
 * A subgroup given by its explicit element set, stored as sorted flat
 * indices. Construction checks identity membership, range, and Lagrange
 * divisibility; full closure is enumerable via verify_closed().
 */
class Subgroup {
public:
    Subgroup(GroupSpec spec, std::vector<std::uint64_t> element_indices,
             std::vector<std::uint64_t> generator_indices = {});

    static Subgroup trivial(const GroupSpec& spec);
    static Subgroup whole(const GroupSpec& spec);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<std::uint64_t>& element_indices() const noexcept { return indices_; }
    const std::vector<std::uint64_t>& generator_indices() const noexcept { return generators_; }
    std::size_t size() const noexcept { return indices_.size(); }

    bool contains_index(std::uint64_t index) const;
    bool contains(const GroupElement& x) const;
    bool is_whole_group() const { return indices_.size() == spec_.order(); }

    std::vector<GroupElement> elements() const;

    /// Enumerates all pairs; throws TheoremViolationError if the set is not
    /// closed under addition and inversion.
    void verify_closed() const;

    bool operator==(const Subgroup& other) const;
    bool operator!=(const Subgroup& other) const { return !(*this == other); }

private:
    GroupSpec spec_;
    std::vector<std::uint64_t> indices_;
    std::vector<std::uint64_t> generators_;
};

/// {y : (y, c) = 1}, computed by exact phase tests over all elements.
Subgroup character_kernel(const Character& c);

/// Smallest subgroup containing all generators (breadth-first closure).
/// Throws ValidationError on an empty generator list.
Subgroup generated_subgroup(const std::vector<GroupElement>& generators);
Subgroup generated_subgroup(const GroupSpec& spec, const std::vector<std::uint64_t>& generator_indices);

Subgroup subgroup_intersection(const Subgroup& s1, const Subgroup& s2);

/// Partition of the group into cosets of `a`, each a sorted list of flat
/// indices, ordered by smallest representative.
std::vector<std::vector<std::uint64_t>> coset_partition(const Subgroup& a);

/// Characters that are 1 on every element of `a`, as sorted flat indices.
std::vector<std::uint64_t> annihilator(const Subgroup& a);

/// A rational point of the circle [0, 1) under addition mod 1.
class CircleRational {
public:
    CircleRational() = default;
    explicit CircleRational(const Rational& r) : value_(mod1(r)) {}

    static CircleRational parse(std::string_view text);

    const Rational& value() const noexcept { return value_; }
    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }

    friend CircleRational operator+(const CircleRational& a, const CircleRational& b) {
        return CircleRational(a.value_ + b.value_);
    }
    bool operator==(const CircleRational& other) const { return value_ == other.value_; }
    bool operator!=(const CircleRational& other) const { return !(*this == other); }
    bool operator<(const CircleRational& other) const { return value_ < other.value_; }

    std::string str() const { return format_rational(value_); }

private:
    Rational value_ = 0;
};

namespace detail {
/// Throws SpecMismatchError unless both specs agree.
void require_same_spec(const GroupSpec& a, const GroupSpec& b, const char* context);
} // namespace detail

} // namespace shiftinv
