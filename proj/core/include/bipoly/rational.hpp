#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bipoly {

/// Arbitrary-precision integers and reduced fractions (denominator >= 1).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

/// "p/q" with q >= 1, always including the denominator.
std::string to_string(const Rational& q);
/// Accepts "p/q", "p" or "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
double to_double(const Rational& q);

}  // namespace bipoly
