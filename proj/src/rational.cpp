#include "csd/rational.hpp"

#include "csd/errors.hpp"

#include <stdexcept>

namespace csd {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty()) throw ParseError("bad fraction '" + std::string(whole) + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad fraction '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("bad fraction '" + std::string(whole) + "'");
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty fraction");
  auto slash = s.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    num = parse_integer(s, text);
    den = 1;
  } else {
    num = parse_integer(s.substr(0, slash), text);
    den = parse_integer(s.substr(slash + 1), text);
  }
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num);
  r /= Rational(den);
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace csd
