#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace effalg {

/// Arbitrary precision rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms; integers are written with denominator 1.
std::string to_string(const Rational& value);

/// Accepts "p/q" with an optional sign on p, or a bare integer.
/// Throws ParseError (line 0) on malformed text, NegativeDenominator for q < 0.
Rational parse_rational(std::string_view text);

}  // namespace effalg
