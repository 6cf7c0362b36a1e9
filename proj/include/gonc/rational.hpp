#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gonc {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we rely on:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Serialization format is "num/den", with "/den" omitted when den = 1.
std::string to_string(const Rational& q);
Rational rational_from_string(std::string_view s);

Rational rat_pow(const Rational& base, int exp);  // exp >= 0

bool is_integer(const Rational& q);
Int to_integer(const Rational& q);  // throws NonIntegerResult

}  // namespace gonc
