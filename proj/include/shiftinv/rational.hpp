#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftinv {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer <= r.
Int floor_rational(const Rational& r);

/// r reduced into [0, 1), i.e. r - floor(r).
Rational mod1(const Rational& r);

/// Parses "p/q" or "p" (optional sign, base 10). Throws ValidationError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

} // namespace shiftinv
