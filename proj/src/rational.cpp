#include "shiftinv/rational.hpp"

#include <cctype>

#include "shiftinv/errors.hpp"

namespace shiftinv {

Int floor_rational(const Rational& r) {
    Int q = numerator(r) / denominator(r); // truncates toward zero
    if (r < 0 && q * denominator(r) != numerator(r)) {
        --q;
    }
    return q;
}

Rational mod1(const Rational& r) {
    return r - Rational(floor_rational(r));
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw ValidationError("malformed rational \"" + std::string(text) +
                              "\", expected \"p\" or \"p/q\"");
    };
    if (text.empty()) fail();

    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const bool has_den = slash != std::string_view::npos;
    const std::string_view den_part = has_den ? text.substr(slash + 1) : std::string_view{};

    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    if (!is_integer(num_part) || (has_den && !is_integer(den_part))) fail();

    const Int num{std::string(num_part)};
    Int den = 1;
    if (has_den) {
        den = Int{std::string(den_part)};
        if (den == 0) {
            throw ValidationError("rational \"" + std::string(text) + "\" has zero denominator");
        }
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace shiftinv
