#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace rkstab {

/// Arbitrary-precision exact rational, always canonical (lowest terms,
/// positive denominator). Every coefficient in the analysis lives here.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses an integer ("-3"), a fraction ("22/7") or a decimal literal
/// ("4.477718303076007e-3"). Decimals are converted exactly over a power of
/// ten. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer factorial(unsigned k);

/// 1/k!
Rational inverse_factorial(unsigned k);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace rkstab
