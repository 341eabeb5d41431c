#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "shiftinv/group.hpp"
#include "shiftinv/rational.hpp"

namespace shiftinv {

/**
 * An exact probability distribution on a finite abelian group: one rational
 * probability per element, in canonical (flat index) order. Nonnegativity
 * and total mass 1 are enforced at construction, so every Distribution in
 * flight is valid.
 */
class Distribution {
public:
    Distribution(GroupSpec spec, std::vector<Rational> probs);

    static Distribution dirac(const GroupSpec& spec, const GroupElement& a);
    static Distribution uniform(const GroupSpec& spec);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<Rational>& probs() const noexcept { return probs_; }
    const Rational& prob_at(std::uint64_t index) const { return probs_.at(index); }
    const Rational& prob(const GroupElement& x) const;

    /// Sorted flat indices with positive probability; never empty.
    std::vector<std::uint64_t> support() const;
    bool has_full_support() const;

    bool operator==(const Distribution& other) const;
    bool operator!=(const Distribution& other) const { return !(*this == other); }

private:
    GroupSpec spec_;
    std::vector<Rational> probs_;
};

/// Numeric table of the characteristic function: one complex value per
/// character, indexed by character flat index. Values have modulus <= 1;
/// the trivial character carries the total mass 1.
class CharTable {
public:
    CharTable(GroupSpec spec, std::vector<std::complex<double>> values);

    const GroupSpec& spec() const noexcept { return spec_; }
    const std::vector<std::complex<double>>& values() const noexcept { return values_; }
    std::complex<double> value_at(std::uint64_t character_index) const {
        return values_.at(character_index);
    }
    std::complex<double> value(const Character& c) const;

private:
    GroupSpec spec_;
    std::vector<std::complex<double>> values_;
};

/// Law of the independent sum: (mu * nu)(z) = sum_x mu(x) nu(z - x), exact.
Distribution convolve(const Distribution& mu, const Distribution& nu);

/// Law of X + a for X ~ mu: probs'(z) = probs(z - a).
Distribution shift(const Distribution& mu, const GroupElement& a);

/// Characteristic function over all characters, via the canonical complex
/// embedding of the exact phases.
CharTable char_table(const Distribution& mu);

/// Decides "mu-hat(c) = 1" exactly: true iff every support element pairs to
/// phase zero with c. No tolerance involved.
bool char_hat_one_exact(const Distribution& mu, const Character& c);

/// Float-valued table recovered from a characteristic table by finite
/// inversion: mu(x) = (1/|G|) sum_c t(c) conj((x, c)).
struct InversionResult {
    GroupSpec spec;
    std::vector<std::complex<double>> values; // indexed by element flat index
};

InversionResult inverse_fourier(const CharTable& table);

/// Total variation distance (1/2) sum |mu - nu|, exact.
Rational tv_distance(const Distribution& mu, const Distribution& nu);

} // namespace shiftinv
