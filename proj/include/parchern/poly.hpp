#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parchern/rational.hpp"

namespace parchern {

/// Univariate polynomial in t over Q; coefficients from t^0 upward, no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly t(unsigned power = 1);

  /// Parses sums of terms like "1 - 2t + 1/2 t^2", "3/4*t^3", "-t".
  static Poly parse(std::string_view text);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t power) const;
  Rational atZero() const { return coeff(0); }

  Poly derivative() const;
  /// Remainder modulo t^order.
  Poly truncated(std::size_t order) const;
  std::string str() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace parchern
