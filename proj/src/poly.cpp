#include "parchern/poly.hpp"

#include <cctype>
#include <sstream>

#include "parchern/errors.hpp"

namespace parchern {

Poly::Poly(const Rational& constant) : coeffs_{constant} { normalize(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::t(unsigned power) {
  std::vector<Rational> c(power + 1);
  c[power] = 1;
  return Poly(std::move(c));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(0); }

Poly Poly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(c));
}

Poly Poly::truncated(std::size_t order) const {
  if (coeffs_.size() <= order) return *this;
  return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0 && mag != 1) os << " ";
    if (i == 1) os << "t";
    else if (i > 1) os << "t^" << i;
    first = false;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.isZero()) throw DomainError("polynomial division by zero");
  Poly rem = a;
  std::vector<Rational> quot(a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_.size() - b.coeffs_.size() + 1 : 0);
  while (!rem.isZero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational factor = rem.coeffs_.back() / b.coeffs_.back();
    quot[shift] = factor;
    std::vector<Rational> sub(shift + b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sub[shift + i] = factor * b.coeffs_[i];
    rem -= Poly(std::move(sub));
  }
  return {Poly(std::move(quot)), rem};
}

// ---------------------------------------------------------------------------
// parsing: term := [sign] [rational] ['*'] ['t' ['^' int]]

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Poly parse() {
    Poly sum;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool firstTerm = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      sum += term() * Poly(Rational(sign));
      firstTerm = false;
      skip();
    }
    return sum;
  }

private:
  Poly term() {
    Rational coeff = 1;
    bool haveCoeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      try {
        coeff = parseRational(s_.substr(start, pos_ - start));
      } catch (const ParseError& e) {
        fail(e.what());
      }
      haveCoeff = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        if (pos_ == s_.size() || s_[pos_] != 't') fail("expected 't' after '*'");
      }
    }
    unsigned power = 0;
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      power = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        power = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      }
    } else if (!haveCoeff) {
      fail("expected a number or 't'");
    }
    return Poly::t(power) * Poly(coeff);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("offset " + std::to_string(pos_), what + " in polynomial \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace parchern
