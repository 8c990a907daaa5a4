#include "rkstab/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace rkstab {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// GMP reads a leading 0 as an octal prefix.
std::string decimal_digits(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? std::string("0") : std::string(s.substr(first));
}

[[noreturn]] void reject(std::string_view text) {
  throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
}

Integer pow10(long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) reject(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    const Integer d{decimal_digits(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    value = Rational(Integer(decimal_digits(num)), d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text)) reject(text);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc{} || exponent > 4096) reject(text);
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto int_part = mantissa.substr(0, dot);
      const auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) reject(text);
      if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        reject(text);
      }
      digits = std::string(int_part) + std::string(frac_part);
      fraction_digits = static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(mantissa)) reject(text);
      digits = std::string(mantissa);
    }
    const long scale = exponent - fraction_digits;
    const Integer mant(decimal_digits(digits));
    value = scale >= 0 ? Rational(mant * pow10(scale)) : Rational(mant, pow10(-scale));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer factorial(unsigned k) {
  Integer result = 1;
  for (unsigned i = 2; i <= k; ++i) result *= i;
  return result;
}

Rational inverse_factorial(unsigned k) { return Rational(Integer(1), factorial(k)); }

}  // namespace rkstab
