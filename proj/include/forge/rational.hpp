#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace forge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "3/10", "0.3", "-2", "1.25e-1". Decimal input is converted exactly.
Rational parse_rational(std::string_view text);

/// "3/10" or "7" for integers.
std::string to_string(const Rational& r);

std::int64_t floor_to_int(const Rational& r);
std::int64_t ceil_to_int(const Rational& r);
double to_double(const Rational& r);

/// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace forge
