#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mvbell {

// Arbitrary-precision integers and rationals. Everything user-visible in this
// library is exact; there is no floating-point code path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! for a machine integer n >= 0.
Int int_factorial(long long n);

/// Binomial coefficient C(n, m); zero when m < 0 or m > n.
Int binomial(long long n, long long m);

/// base^exp for exp >= 0 (0^0 = 1).
Rational rational_pow(const Rational& base, long long exp);

/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace mvbell
