#include "parchern/rational.hpp"

#include <cctype>

#include "parchern/errors.hpp"

namespace parchern {

Rational makeRational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string toString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool parseIntegerPart(std::string_view s, Integer& out) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parseRational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Integer num, den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parseIntegerPart(s, num)
                      : parseIntegerPart(trim(s.substr(0, slash)), num) &&
                            parseIntegerPart(trim(s.substr(slash + 1)), den);
  if (!ok) throw ParseError("", "not a rational: \"" + std::string(text) + "\"");
  if (den == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floorOf(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational fractionalPart(const Rational& value) {
  Rational r = value - Rational(floorOf(value));
  r.canonicalize();
  return r;
}

bool isInteger(const Rational& value) { return value.get_den() == 1; }

}  // namespace parchern
