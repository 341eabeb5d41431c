#include "shiftinv/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <sstream>

#include "shiftinv/errors.hpp"

namespace shiftinv {

namespace detail {

void require_same_spec(const GroupSpec& a, const GroupSpec& b, const char* context) {
    if (a != b) {
        throw SpecMismatchError(std::string(context) + ": operands bound to different groups (" +
                                a.describe() + " vs " + b.describe() + ")");
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(std::vector<std::uint64_t> cyclic_orders, std::uint64_t order_cap)
    : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) {
        throw ValidationError("group spec needs at least one cyclic factor");
    }
    Int product = 1;
    for (std::uint64_t n : orders_) {
        if (n == 0) {
            throw ValidationError("cyclic order must be >= 1");
        }
        product *= n;
        if (product > order_cap) {
            throw ScaleExceededError("group order exceeds enumeration cap " +
                                     std::to_string(order_cap));
        }
    }
    order_ = product.convert_to<std::uint64_t>();
}

std::uint64_t GroupSpec::index_of(const std::vector<std::uint64_t>& residues) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        idx = idx * orders_[j] + residues[j];
    }
    return idx;
}

std::vector<std::uint64_t> GroupSpec::residues_at(std::uint64_t index) const {
    std::vector<std::uint64_t> residues(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
        residues[j] = index % orders_[j];
        index /= orders_[j];
    }
    return residues;
}

GroupElement GroupSpec::element(std::vector<std::uint64_t> residues) const {
    return GroupElement(*this, std::move(residues));
}

GroupElement GroupSpec::element_at(std::uint64_t index) const {
    if (index >= order_) {
        throw ValidationError("element index " + std::to_string(index) + " out of range for " +
                              describe());
    }
    return GroupElement(*this, residues_at(index));
}

GroupElement GroupSpec::zero() const {
    return GroupElement(*this, std::vector<std::uint64_t>(orders_.size(), 0));
}

Character GroupSpec::character(std::vector<std::uint64_t> indices) const {
    return Character(*this, std::move(indices));
}

Character GroupSpec::character_at(std::uint64_t index) const {
    if (index >= order_) {
        throw ValidationError("character index " + std::to_string(index) + " out of range for " +
                              describe());
    }
    return Character(*this, residues_at(index));
}

std::uint64_t GroupSpec::add_indices(std::uint64_t a, std::uint64_t b) const {
    const auto ra = residues_at(a);
    const auto rb = residues_at(b);
    std::vector<std::uint64_t> sum(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        sum[j] = (ra[j] + rb[j]) % orders_[j];
    }
    return index_of(sum);
}

std::uint64_t GroupSpec::negate_index(std::uint64_t a) const {
    auto r = residues_at(a);
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        r[j] = (orders_[j] - r[j]) % orders_[j];
    }
    return index_of(r);
}

std::string GroupSpec::describe() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (j) out << " x ";
        out << "Z_" << orders_[j];
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(GroupSpec spec, std::vector<std::uint64_t> residues)
    : spec_(std::move(spec)), residues_(std::move(residues)) {
    if (residues_.size() != spec_.rank()) {
        throw ValidationError("residue tuple has rank " + std::to_string(residues_.size()) +
                              ", expected " + std::to_string(spec_.rank()) + " for " +
                              spec_.describe());
    }
    const auto& orders = spec_.cyclic_orders();
    for (std::size_t j = 0; j < residues_.size(); ++j) {
        residues_[j] %= orders[j];
    }
}

bool GroupElement::is_zero() const {
    return std::all_of(residues_.begin(), residues_.end(),
                       [](std::uint64_t r) { return r == 0; });
}

GroupElement GroupElement::operator-() const {
    auto r = residues_;
    const auto& orders = spec_.cyclic_orders();
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = (orders[j] - r[j]) % orders[j];
    }
    return GroupElement(spec_, std::move(r));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    detail::require_same_spec(a.spec_, b.spec_, "element addition");
    const auto& orders = a.spec_.cyclic_orders();
    std::vector<std::uint64_t> sum(orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) {
        sum[j] = (a.residues_[j] + b.residues_[j]) % orders[j];
    }
    return GroupElement(a.spec_, std::move(sum));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
    return a + (-b);
}

bool GroupElement::operator==(const GroupElement& other) const {
    return spec_ == other.spec_ && residues_ == other.residues_;
}

bool GroupElement::operator<(const GroupElement& other) const {
    detail::require_same_spec(spec_, other.spec_, "element comparison");
    return residues_ < other.residues_;
}

// ---------------------------------------------------------------------------
// RationalPhase

std::complex<double> RationalPhase::unit_value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * to_double(value_));
}

// ---------------------------------------------------------------------------
// Character

Character::Character(GroupSpec spec, std::vector<std::uint64_t> indices)
    : spec_(std::move(spec)), indices_(std::move(indices)) {
    if (indices_.size() != spec_.rank()) {
        throw ValidationError("character index tuple has rank " + std::to_string(indices_.size()) +
                              ", expected " + std::to_string(spec_.rank()) + " for " +
                              spec_.describe());
    }
    const auto& orders = spec_.cyclic_orders();
    for (std::size_t j = 0; j < indices_.size(); ++j) {
        indices_[j] %= orders[j];
    }
}

bool Character::is_trivial() const {
    return std::all_of(indices_.begin(), indices_.end(),
                       [](std::uint64_t m) { return m == 0; });
}

RationalPhase Character::phase_at(const GroupElement& x) const {
    detail::require_same_spec(spec_, x.spec(), "character pairing");
    const auto& orders = spec_.cyclic_orders();
    Rational sum = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        if (indices_[j] == 0 || x.residues()[j] == 0) continue;
        sum += Rational(Int(indices_[j]) * Int(x.residues()[j]), Int(orders[j]));
    }
    return RationalPhase(sum);
}

std::complex<double> Character::value_at(const GroupElement& x) const {
    return phase_at(x).unit_value();
}

std::uint64_t Character::order() const {
    const auto& orders = spec_.cyclic_orders();
    std::uint64_t ord = 1;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        // order of m_j in Z_{n_j} is n_j / gcd(m_j, n_j)
        const std::uint64_t oj = orders[j] / std::gcd(indices_[j], orders[j]);
        ord = std::lcm(ord, oj);
    }
    return ord;
}

Character Character::inverse() const {
    auto m = indices_;
    const auto& orders = spec_.cyclic_orders();
    for (std::size_t j = 0; j < m.size(); ++j) {
        m[j] = (orders[j] - m[j]) % orders[j];
    }
    return Character(spec_, std::move(m));
}

Character operator*(const Character& a, const Character& b) {
    detail::require_same_spec(a.spec_, b.spec_, "character product");
    const auto& orders = a.spec_.cyclic_orders();
    std::vector<std::uint64_t> m(orders.size());
    for (std::size_t j = 0; j < orders.size(); ++j) {
        m[j] = (a.indices_[j] + b.indices_[j]) % orders[j];
    }
    return Character(a.spec_, std::move(m));
}

bool Character::operator==(const Character& other) const {
    return spec_ == other.spec_ && indices_ == other.indices_;
}

RationalPhase pairing_phase(const GroupElement& x, const Character& c) {
    return c.phase_at(x);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupSpec spec, std::vector<std::uint64_t> element_indices,
                   std::vector<std::uint64_t> generator_indices)
    : spec_(std::move(spec)),
      indices_(std::move(element_indices)),
      generators_(std::move(generator_indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (indices_.empty() || indices_.front() != 0) {
        throw ValidationError("subgroup must contain the identity");
    }
    if (indices_.back() >= spec_.order()) {
        throw ValidationError("subgroup element index out of range for " + spec_.describe());
    }
    if (spec_.order() % indices_.size() != 0) {
        throw ValidationError("subgroup size " + std::to_string(indices_.size()) +
                              " does not divide group order " + std::to_string(spec_.order()));
    }
}

Subgroup Subgroup::trivial(const GroupSpec& spec) {
    return Subgroup(spec, {0});
}

Subgroup Subgroup::whole(const GroupSpec& spec) {
    std::vector<std::uint64_t> all(spec.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(spec, std::move(all));
}

bool Subgroup::contains_index(std::uint64_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool Subgroup::contains(const GroupElement& x) const {
    detail::require_same_spec(spec_, x.spec(), "subgroup membership");
    return contains_index(x.index());
}

std::vector<GroupElement> Subgroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(indices_.size());
    for (std::uint64_t idx : indices_) {
        out.push_back(spec_.element_at(idx));
    }
    return out;
}

void Subgroup::verify_closed() const {
    for (std::uint64_t a : indices_) {
        if (!contains_index(spec_.negate_index(a))) {
            throw TheoremViolationError("subgroup not closed under inversion");
        }
        for (std::uint64_t b : indices_) {
            if (!contains_index(spec_.add_indices(a, b))) {
                throw TheoremViolationError("subgroup not closed under addition");
            }
        }
    }
}

bool Subgroup::operator==(const Subgroup& other) const {
    return spec_ == other.spec_ && indices_ == other.indices_;
}

Subgroup character_kernel(const Character& c) {
    const GroupSpec& spec = c.spec();
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t i = 0; i < spec.order(); ++i) {
        if (c.phase_at(spec.element_at(i)).is_zero()) {
            kernel.push_back(i);
        }
    }
    return Subgroup(spec, std::move(kernel));
}

Subgroup generated_subgroup(const GroupSpec& spec,
                            const std::vector<std::uint64_t>& generator_indices) {
    if (generator_indices.empty()) {
        throw ValidationError("generated_subgroup needs at least one generator");
    }
    std::vector<bool> seen(spec.order(), false);
    std::deque<std::uint64_t> frontier;
    seen[0] = true;
    frontier.push_back(0);
    while (!frontier.empty()) {
        const std::uint64_t current = frontier.front();
        frontier.pop_front();
        for (std::uint64_t g : generator_indices) {
            if (g >= spec.order()) {
                throw ValidationError("generator index out of range for " + spec.describe());
            }
            const std::uint64_t next = spec.add_indices(current, g);
            if (!seen[next]) {
                seen[next] = true;
                frontier.push_back(next);
            }
        }
    }
    std::vector<std::uint64_t> closure;
    for (std::uint64_t i = 0; i < spec.order(); ++i) {
        if (seen[i]) closure.push_back(i);
    }
    auto gens = generator_indices;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return Subgroup(spec, std::move(closure), std::move(gens));
}

Subgroup generated_subgroup(const std::vector<GroupElement>& generators) {
    if (generators.empty()) {
        throw ValidationError("generated_subgroup needs at least one generator");
    }
    const GroupSpec& spec = generators.front().spec();
    std::vector<std::uint64_t> indices;
    indices.reserve(generators.size());
    for (const auto& g : generators) {
        detail::require_same_spec(spec, g.spec(), "generated_subgroup");
        indices.push_back(g.index());
    }
    return generated_subgroup(spec, indices);
}

Subgroup subgroup_intersection(const Subgroup& s1, const Subgroup& s2) {
    detail::require_same_spec(s1.spec(), s2.spec(), "subgroup intersection");
    std::vector<std::uint64_t> common;
    std::set_intersection(s1.element_indices().begin(), s1.element_indices().end(),
                          s2.element_indices().begin(), s2.element_indices().end(),
                          std::back_inserter(common));
    return Subgroup(s1.spec(), std::move(common));
}

std::vector<std::vector<std::uint64_t>> coset_partition(const Subgroup& a) {
    const GroupSpec& spec = a.spec();
    std::vector<bool> assigned(spec.order(), false);
    std::vector<std::vector<std::uint64_t>> cosets;
    for (std::uint64_t rep = 0; rep < spec.order(); ++rep) {
        if (assigned[rep]) continue;
        std::vector<std::uint64_t> coset;
        coset.reserve(a.size());
        for (std::uint64_t h : a.element_indices()) {
            const std::uint64_t member = spec.add_indices(rep, h);
            assigned[member] = true;
            coset.push_back(member);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::vector<std::uint64_t> annihilator(const Subgroup& a) {
    const GroupSpec& spec = a.spec();
    std::vector<std::uint64_t> chars;
    for (std::uint64_t c = 0; c < spec.order(); ++c) {
        const Character gamma = spec.character_at(c);
        bool kills = true;
        for (std::uint64_t h : a.element_indices()) {
            if (!gamma.phase_at(spec.element_at(h)).is_zero()) {
                kills = false;
                break;
            }
        }
        if (kills) chars.push_back(c);
    }
    return chars;
}

// ---------------------------------------------------------------------------
// CircleRational

CircleRational CircleRational::parse(std::string_view text) {
    return CircleRational(parse_rational(text));
}

} // namespace shiftinv
