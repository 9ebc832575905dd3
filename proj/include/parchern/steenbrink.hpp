#pragma once

// Complexes of free modules over Q[t]/(t^N) carrying an action of the
// logarithmic vector field t d/dt, and the checker for the local freeness
// criterion: identity scalar action and nilpotent residue on the cohomology
// of the special fiber force the cohomology ranks to be constant.

#include <string>
#include <vector>

#include "parchern/linalg.hpp"
#include "parchern/poly.hpp"

namespace parchern {

class TruncatedSeriesRing {
public:
  /// order >= 2.
  explicit TruncatedSeriesRing(int order);

  int order() const { return order_; }
  Poly reduce(const Poly& p) const { return p.truncated(static_cast<std::size_t>(order_)); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

private:
  int order_;
};

class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix constant(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Value at t = 0.
  Matrix atZero() const;
  /// Largest t-degree of an entry; -1 when zero.
  int maxDegree() const;
  bool isZero() const;
  PolyMatrix derivative() const;
  PolyMatrix timesT() const;
  PolyMatrix truncated(std::size_t order) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Rank over the fraction field Q(t), by fraction-free elimination.
std::size_t genericRank(const PolyMatrix& m);

struct LogComplexData {
  int order = 2;                   // N
  std::vector<std::size_t> ranks;  // ranks of F^0 .. F^m
  std::vector<PolyMatrix> d;       // d[i]: F^i -> F^{i+1}, shape ranks[i+1] x ranks[i]
  std::vector<PolyMatrix> m0;      // scalar part of the action, per term
  std::vector<PolyMatrix> m1;      // action of t d/dt, per term
};

class LogComplex {
public:
  /// Validates shapes, the degree bound (every entry has t-degree <= N - 2),
  /// d^2 = 0, M0 a chain map mod t^N and d M1 - M1 d = t d' mod t^(N-1).
  static LogComplex create(LogComplexData data);

  const TruncatedSeriesRing& ring() const { return ring_; }
  int order() const { return ring_.order(); }
  const std::vector<std::size_t>& ranks() const { return data_.ranks; }
  std::size_t length() const { return data_.ranks.size(); }
  const std::vector<PolyMatrix>& d() const { return data_.d; }
  const std::vector<PolyMatrix>& m0() const { return data_.m0; }
  const std::vector<PolyMatrix>& m1() const { return data_.m1; }

private:
  explicit LogComplex(LogComplexData data) : ring_(data.order), data_(std::move(data)) {}

  TruncatedSeriesRing ring_;
  LogComplexData data_;
};

enum class Fiber { Origin, Generic };

std::vector<long> fiberCohomologyRanks(const LogComplex& complex, Fiber fiber);

long eulerCharacteristic(const std::vector<long>& ranks);

struct HypothesisReport {
  bool m0Identity = true;
  bool residueNilpotent = true;
  std::vector<Matrix> inducedM0;     // per degree, on origin-fiber cohomology
  std::vector<Matrix> inducedM1;
  std::vector<Vector> residueCharPolys;  // det(x - induced M1), low to high
  std::string detail;
};

HypothesisReport checkHypotheses(const LogComplex& complex);

enum class VerdictStatus { Pass, HypothesisFailure, TheoremViolation };

struct SteenbrinkVerdict {
  VerdictStatus status;
  std::vector<long> originRanks;
  std::vector<long> genericRanks;
  HypothesisReport hypotheses;
  std::string message;
};

SteenbrinkVerdict verdict(const LogComplex& complex);

std::string toString(VerdictStatus status);
/// Characteristic polynomial in x, for messages.
std::string charPolyString(const Vector& coeffs);

}  // namespace parchern
