#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lightspan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "3/2" or "0.25" into an exact rational. Throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (always in lowest terms).
std::string to_string(const Rational& r);

double to_double(const Rational& r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

}  // namespace lightspan
