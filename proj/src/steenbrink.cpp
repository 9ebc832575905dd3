#include "parchern/steenbrink.hpp"

#include <sstream>

#include "parchern/errors.hpp"

namespace parchern {

TruncatedSeriesRing::TruncatedSeriesRing(int order) : order_(order) {
  if (order < 2) throw InvalidInput("truncation order N must be at least 2");
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(Rational(1));
  return m;
}

PolyMatrix PolyMatrix::constant(const Matrix& c) {
  PolyMatrix m(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly(c(i, j));
  return m;
}

Matrix PolyMatrix::atZero() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).atZero();
  return m;
}

int PolyMatrix::maxDegree() const {
  int deg = -1;
  for (const auto& p : data_) deg = std::max(deg, p.degree());
  return deg;
}

bool PolyMatrix::isZero() const {
  for (const auto& p : data_)
    if (!p.isZero()) return false;
  return true;
}

PolyMatrix PolyMatrix::derivative() const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p.derivative();
  return m;
}

PolyMatrix PolyMatrix::timesT() const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p * Poly::t();
  return m;
}

PolyMatrix PolyMatrix::truncated(std::size_t order) const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = p.truncated(order);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("polynomial matrix product size mismatch");
  PolyMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("polynomial matrix sum size mismatch");
  PolyMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("polynomial matrix difference size mismatch");
  PolyMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

std::size_t genericRank(const PolyMatrix& input) {
  PolyMatrix m = input;
  Poly previous(Rational(1));
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).isZero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        const Poly cross = m(row, col) * m(r, c) - m(r, col) * m(row, c);
        auto [q, rem] = divmod(cross, previous);
        if (!rem.isZero()) throw Error("fraction-free elimination: inexact division");
        m(r, c) = std::move(q);
      }
      m(r, col) = Poly();
    }
    previous = m(row, col);
    ++row;
  }
  return row;
}

// ---------------------------------------------------------------------------
// LogComplex

LogComplex LogComplex::create(LogComplexData data) {
  const TruncatedSeriesRing ring(data.order);
  const std::size_t n = data.ranks.size();
  const auto N = static_cast<std::size_t>(data.order);
  if (n == 0) throw InvalidInput("complex has no terms");
  if (data.d.size() != n - 1)
    throw InvalidInput("complex with " + std::to_string(n) + " terms needs " + std::to_string(n - 1) + " differentials");
  if (data.m0.size() != n || data.m1.size() != n) throw InvalidInput("M0 and M1 need one matrix per term");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (data.d[i].rows() != data.ranks[i + 1] || data.d[i].cols() != data.ranks[i])
      throw InvalidInput("d[" + std::to_string(i) + "] must be " + std::to_string(data.ranks[i + 1]) + "x" +
                         std::to_string(data.ranks[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto* m : {&data.m0[i], &data.m1[i]})
      if (m->rows() != data.ranks[i] || m->cols() != data.ranks[i])
        throw InvalidInput("action matrices on term " + std::to_string(i) + " must be " +
                           std::to_string(data.ranks[i]) + "x" + std::to_string(data.ranks[i]));

  int maxDeg = -1;
  for (const auto* list : {&data.d, &data.m0, &data.m1})
    for (const auto& m : *list) maxDeg = std::max(maxDeg, m.maxDegree());
  if (maxDeg + 1 >= data.order)
    throw InvalidInput("truncation order N = " + std::to_string(data.order) + " must exceed the largest t-degree (" +
                       std::to_string(maxDeg) + ") plus 1");

  for (std::size_t i = 0; i + 2 < n; ++i)
    if (!(data.d[i + 1] * data.d[i]).isZero())
      throw InvalidInput("d[" + std::to_string(i + 1) + "] * d[" + std::to_string(i) + "] != 0");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const PolyMatrix& d = data.d[i];
    if (!(d * data.m0[i] - data.m0[i + 1] * d).truncated(N).isZero())
      throw InvalidInput("M0 does not commute with d[" + std::to_string(i) + "] mod t^N");
    const PolyMatrix lhs = d * data.m1[i] - data.m1[i + 1] * d;
    if (!(lhs - d.derivative().timesT()).truncated(N - 1).isZero())
      throw InvalidInput("d M1 - M1 d != t d' for d[" + std::to_string(i) + "] mod t^(N-1)");
  }
  return LogComplex(std::move(data));
}

// ---------------------------------------------------------------------------
// cohomology

std::vector<long> fiberCohomologyRanks(const LogComplex& complex, Fiber fiber) {
  const std::size_t n = complex.length();
  std::vector<long> diffRank(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    diffRank[i] = static_cast<long>(fiber == Fiber::Origin ? rankOf(complex.d()[i].atZero()) : genericRank(complex.d()[i]));
  std::vector<long> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    long r = static_cast<long>(complex.ranks()[i]);
    if (i + 1 < n) r -= diffRank[i];
    if (i > 0) r -= diffRank[i - 1];
    ranks[i] = r;
  }
  return ranks;
}

long eulerCharacteristic(const std::vector<long>& ranks) {
  long chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * ranks[i];
  return chi;
}

namespace {

// Representatives of H^i of the origin fiber, and the induced action of an
// endomorphism `m` of F^i_0 on them.
struct FiberCohomology {
  std::vector<Vector> imageBasis;
  std::vector<Vector> representatives;

  Matrix induced(const Matrix& m) const {
    std::vector<Vector> all = imageBasis;
    all.insert(all.end(), representatives.begin(), representatives.end());
    const std::size_t dim = representatives.size();
    Matrix out(dim, dim);
    if (dim == 0) return out;
    const Matrix basis = Matrix::fromColumns(m.rows(), all);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto c = solve(basis, m.apply(representatives[j]));
      if (!c) throw Error("action does not preserve cocycles of the special fiber");
      for (std::size_t r = 0; r < dim; ++r) out(r, j) = (*c)[imageBasis.size() + r];
    }
    return out;
  }
};

bool inSpan(std::size_t dim, const std::vector<Vector>& vectors, const Vector& v) {
  if (vectors.empty()) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  return solve(Matrix::fromColumns(dim, vectors), v).has_value();
}

FiberCohomology originCohomology(const LogComplex& complex, std::size_t i) {
  const std::size_t dim = complex.ranks()[i];
  FiberCohomology h;
  if (i > 0) {
    const Matrix incoming = complex.d()[i - 1].atZero();
    for (std::size_t c = 0; c < incoming.cols(); ++c) {
      Vector col = incoming.column(c);
      if (!inSpan(dim, h.imageBasis, col)) h.imageBasis.push_back(std::move(col));
    }
  }
  std::vector<Vector> cocycles;
  if (i + 1 < complex.length()) {
    cocycles = kernelBasis(complex.d()[i].atZero());
  } else {
    for (std::size_t k = 0; k < dim; ++k) {
      Vector e(dim);
      e[k] = 1;
      cocycles.push_back(std::move(e));
    }
  }
  std::vector<Vector> spanned = h.imageBasis;
  for (auto& z : cocycles)
    if (!inSpan(dim, spanned, z)) {
      spanned.push_back(z);
      h.representatives.push_back(std::move(z));
    }
  return h;
}

}  // namespace

std::string charPolyString(const Vector& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0 && mag != 1) os << "*";
    if (k == 1) os << "x";
    else if (k > 1) os << "x^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

HypothesisReport checkHypotheses(const LogComplex& complex) {
  HypothesisReport report;
  std::ostringstream detail;
  for (std::size_t i = 0; i < complex.length(); ++i) {
    const FiberCohomology h = originCohomology(complex, i);
    Matrix m0 = h.induced(complex.m0()[i].atZero());
    Matrix m1 = h.induced(complex.m1()[i].atZero());
    Vector poly = characteristicPolynomial(m1);
    if (!(m0 == Matrix::identity(m0.rows()))) {
      report.m0Identity = false;
      detail << "M0 is not the identity on H^" << i << " of the special fiber; ";
    }
    bool nilpotent = true;
    for (std::size_t k = 0; k + 1 < poly.size(); ++k) nilpotent = nilpotent && sgn(poly[k]) == 0;
    if (!nilpotent) {
      report.residueNilpotent = false;
      detail << "residue on H^" << i << " has characteristic polynomial " << charPolyString(poly) << "; ";
    }
    report.inducedM0.push_back(std::move(m0));
    report.inducedM1.push_back(std::move(m1));
    report.residueCharPolys.push_back(std::move(poly));
  }
  report.detail = detail.str();
  if (report.detail.size() >= 2) report.detail.resize(report.detail.size() - 2);
  return report;
}

std::string toString(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::HypothesisFailure: return "HYPOTHESIS FAILURE";
    case VerdictStatus::TheoremViolation: return "THEOREM VIOLATION";
  }
  return "?";
}

namespace {

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

SteenbrinkVerdict verdict(const LogComplex& complex) {
  SteenbrinkVerdict v{VerdictStatus::Pass, fiberCohomologyRanks(complex, Fiber::Origin),
                      fiberCohomologyRanks(complex, Fiber::Generic), checkHypotheses(complex), {}};
  const bool hypotheses = v.hypotheses.m0Identity && v.hypotheses.residueNilpotent;
  const bool constant = v.originRanks == v.genericRanks;
  if (!hypotheses) {
    v.status = VerdictStatus::HypothesisFailure;
    v.message = v.hypotheses.detail + "; origin ranks " + join(v.originRanks) + ", generic ranks " + join(v.genericRanks);
  } else if (!constant) {
    v.status = VerdictStatus::TheoremViolation;
    v.message = "hypotheses hold but origin ranks " + join(v.originRanks) + " differ from generic ranks " +
                join(v.genericRanks);
  } else {
    v.message = "cohomology ranks constant " + join(v.originRanks);
  }
  return v;
}

}  // namespace parchern
