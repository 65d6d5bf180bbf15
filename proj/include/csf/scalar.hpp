#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace csf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering; rationals with denominator 1 print as integers,
/// others as "a/b".
std::string to_decimal(const Integer& value);
std::string to_decimal(const Rational& value);

/// Parses "12", "-3", or "-7/4". Throws `std::invalid_argument`.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

/// Numerator of an integral rational; throws `std::domain_error` otherwise.
Integer to_integer(const Rational& value);

Integer binomial(int n, int k);

}  // namespace csf
