#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace trivol {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact value.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Nearest double, then rounded to `digits` significant decimal digits.
double to_rounded_double(const Rational& value, int digits = 12);

/// Same rounding, rendered with %.{digits}g.
std::string to_decimal_string(const Rational& value, int digits = 12);

}  // namespace trivol
