#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parchern/rational.hpp"

namespace parchern {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix fromColumns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  bool isZero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rankOf(Matrix m);

/// Coefficients c with a * c = b, if any. Columns of `a` need not be independent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of the null space of `m`.
std::vector<Vector> kernelBasis(const Matrix& m);

/// Characteristic polynomial det(x I - a), coefficients from x^0 up to x^n.
Vector characteristicPolynomial(const Matrix& a);

}  // namespace parchern
