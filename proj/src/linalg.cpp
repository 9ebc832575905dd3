#include "parchern/linalg.hpp"

#include <cassert>
#include <utility>

#include "parchern/errors.hpp"

namespace parchern {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::fromColumns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DomainError("matrix/vector size mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

bool Matrix::isZero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rowReduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rankOf(Matrix m) { return rowReduce(m).size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::vector<Vector> kernelBasis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rowReduce(r);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Faddeev-LeVerrier recursion; exact over Q.
Vector characteristicPolynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Vector coeffs(n + 1);
  coeffs[n] = 1;
  Matrix aux(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = a * aux;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += coeffs[n - k + 1];
    const Matrix prod = a * aux;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return coeffs;
}

}  // namespace parchern
