#include "trivol/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace trivol {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("cannot parse rational '" + std::string(text) +
                              "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) bad(text);

  try {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      Integer num = parse_integer(s.substr(0, slash));
      std::string_view den_text = s.substr(slash + 1);
      if (!all_digits(den_text)) bad(text);
      Integer den(std::string{den_text});
      if (den == 0) bad(text);
      return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = s.substr(0, dot);
      std::string_view frac_part = s.substr(dot + 1);
      bool negative = !int_part.empty() && int_part.front() == '-';
      if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
        int_part.remove_prefix(1);
      if (int_part.empty() && frac_part.empty()) bad(text);
      if (!int_part.empty() && !all_digits(int_part)) bad(text);
      if (!frac_part.empty() && !all_digits(frac_part)) bad(text);
      Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
      Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part));
      Integer scale = boost::multiprecision::pow(Integer(10),
                                                 static_cast<unsigned>(frac_part.size()));
      Rational value = Rational(whole) + Rational(frac, scale);
      return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(s));
  } catch (const std::invalid_argument&) {
    bad(text);
  }
}

std::string to_string(const Rational& value) { return value.str(); }

double to_rounded_double(const Rational& value, int digits) {
  return std::stod(to_decimal_string(value, digits));
}

std::string to_decimal_string(const Rational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value.convert_to<double>());
  return buf;
}

}  // namespace trivol
