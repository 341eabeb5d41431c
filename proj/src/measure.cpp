#include "shiftinv/measure.hpp"

#include <algorithm>

#include "shiftinv/errors.hpp"

namespace shiftinv {

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(GroupSpec spec, std::vector<Rational> probs)
    : spec_(std::move(spec)), probs_(std::move(probs)) {
    if (probs_.size() != spec_.order()) {
        throw ValidationError("probability table has " + std::to_string(probs_.size()) +
                              " entries, expected " + std::to_string(spec_.order()) + " for " +
                              spec_.describe());
    }
    Rational mass = 0;
    for (const Rational& p : probs_) {
        if (p < 0) {
            throw ValidationError("negative probability " + format_rational(p));
        }
        mass += p;
    }
    if (mass != 1) {
        throw ValidationError("mass != 1: probabilities sum to " + format_rational(mass));
    }
}

Distribution Distribution::dirac(const GroupSpec& spec, const GroupElement& a) {
    detail::require_same_spec(spec, a.spec(), "dirac");
    std::vector<Rational> probs(spec.order(), Rational(0));
    probs[a.index()] = 1;
    return Distribution(spec, std::move(probs));
}

Distribution Distribution::uniform(const GroupSpec& spec) {
    std::vector<Rational> probs(spec.order(), Rational(1, spec.order()));
    return Distribution(spec, std::move(probs));
}

const Rational& Distribution::prob(const GroupElement& x) const {
    detail::require_same_spec(spec_, x.spec(), "probability lookup");
    return probs_[x.index()];
}

std::vector<std::uint64_t> Distribution::support() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i] > 0) out.push_back(i);
    }
    return out;
}

bool Distribution::has_full_support() const {
    return std::all_of(probs_.begin(), probs_.end(), [](const Rational& p) { return p > 0; });
}

bool Distribution::operator==(const Distribution& other) const {
    return spec_ == other.spec_ && probs_ == other.probs_;
}

// ---------------------------------------------------------------------------
// CharTable

CharTable::CharTable(GroupSpec spec, std::vector<std::complex<double>> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
    if (values_.size() != spec_.order()) {
        throw ValidationError("characteristic table size mismatch");
    }
}

std::complex<double> CharTable::value(const Character& c) const {
    detail::require_same_spec(spec_, c.spec(), "characteristic table lookup");
    return values_[c.index()];
}

// ---------------------------------------------------------------------------
// Operations

Distribution convolve(const Distribution& mu, const Distribution& nu) {
    detail::require_same_spec(mu.spec(), nu.spec(), "convolution");
    const GroupSpec& spec = mu.spec();
    std::vector<Rational> result(spec.order(), Rational(0));
    const auto mu_support = mu.support();
    const auto nu_support = nu.support();
    for (std::uint64_t x : mu_support) {
        const Rational& px = mu.prob_at(x);
        for (std::uint64_t y : nu_support) {
            result[spec.add_indices(x, y)] += px * nu.prob_at(y);
        }
    }
    return Distribution(spec, std::move(result));
}

Distribution shift(const Distribution& mu, const GroupElement& a) {
    detail::require_same_spec(mu.spec(), a.spec(), "shift");
    const GroupSpec& spec = mu.spec();
    const std::uint64_t a_idx = a.index();
    std::vector<Rational> result(spec.order(), Rational(0));
    for (std::uint64_t x = 0; x < spec.order(); ++x) {
        result[spec.add_indices(x, a_idx)] = mu.prob_at(x);
    }
    return Distribution(spec, std::move(result));
}

CharTable char_table(const Distribution& mu) {
    const GroupSpec& spec = mu.spec();
    const auto support = mu.support();
    std::vector<GroupElement> support_elems;
    support_elems.reserve(support.size());
    for (std::uint64_t x : support) {
        support_elems.push_back(spec.element_at(x));
    }
    std::vector<std::complex<double>> values(spec.order());
    for (std::uint64_t c = 0; c < spec.order(); ++c) {
        const Character gamma = spec.character_at(c);
        std::complex<double> sum = 0.0;
        for (std::size_t k = 0; k < support.size(); ++k) {
            sum += to_double(mu.prob_at(support[k])) * gamma.value_at(support_elems[k]);
        }
        values[c] = sum;
    }
    return CharTable(spec, std::move(values));
}

bool char_hat_one_exact(const Distribution& mu, const Character& c) {
    detail::require_same_spec(mu.spec(), c.spec(), "char_hat_one_exact");
    const GroupSpec& spec = mu.spec();
    for (std::uint64_t x : mu.support()) {
        if (!c.phase_at(spec.element_at(x)).is_zero()) {
            return false;
        }
    }
    return true;
}

InversionResult inverse_fourier(const CharTable& table) {
    const GroupSpec& spec = table.spec();
    const double scale = 1.0 / static_cast<double>(spec.order());
    std::vector<std::complex<double>> values(spec.order());
    for (std::uint64_t x = 0; x < spec.order(); ++x) {
        const GroupElement elem = spec.element_at(x);
        std::complex<double> sum = 0.0;
        for (std::uint64_t c = 0; c < spec.order(); ++c) {
            sum += table.value_at(c) * std::conj(spec.character_at(c).value_at(elem));
        }
        values[x] = scale * sum;
    }
    return InversionResult{spec, std::move(values)};
}

Rational tv_distance(const Distribution& mu, const Distribution& nu) {
    detail::require_same_spec(mu.spec(), nu.spec(), "tv_distance");
    Rational total = 0;
    for (std::uint64_t i = 0; i < mu.spec().order(); ++i) {
        total += abs(mu.prob_at(i) - nu.prob_at(i));
    }
    return total / 2;
}

} // namespace shiftinv
