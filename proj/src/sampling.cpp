#include "parchern/sampling.hpp"

#include <algorithm>

namespace parchern {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Sampler::rational(long maxNumerator, long maxDenominator) {
  return makeRational(integer(-maxNumerator, maxNumerator), integer(1, maxDenominator));
}

ChowElement randomDivisorClass(Sampler& s, const ModelPtr& model, long bound) {
  Vector v(model->size());
  for (std::size_t i = model->offset(1); i < model->offset(2); ++i) v[i] = s.integer(-bound, bound);
  return ChowElement(model, std::move(v));
}

ChowElement randomElement(Sampler& s, const ModelPtr& model, int minDegree) {
  Vector v(model->size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (model->degreeOf(i) >= minDegree) v[i] = s.rational();
  return ChowElement(model, std::move(v));
}

ParabolicLineBundle randomLineBundle(Sampler& s, const DivisorPtr& divisor) {
  ParabolicLineBundle b{randomDivisorClass(s, divisor->model()), {}};
  for (const auto& id : divisor->ids())
    if (s.integer(0, 2) != 0) b.twist.set(id, s.rational(9, 4));
  return b;
}

ParabolicKClass randomBundle(Sampler& s, const DivisorPtr& divisor, int maxTerms) {
  ParabolicKClass f(divisor);
  const long terms = s.integer(1, maxTerms);
  for (long i = 0; i < terms; ++i) {
    long mult = s.integer(-2, 3);
    if (mult == 0) mult = 1;
    f.add(mult, randomLineBundle(s, divisor));
  }
  return f;
}

MultiIndex randomMultiIndex(Sampler& s, const DivisorPtr& divisor) {
  MultiIndex a;
  for (const auto& id : divisor->ids())
    if (s.coin()) a.entries[id] = s.rational(9, 4);
  return a;
}

AbelianLogConnection randomConnection(Sampler& s, const DivisorPtr& divisor, int maxRank) {
  std::vector<RankOnePiece> pieces;
  const long rank = s.integer(1, maxRank);
  for (long i = 0; i < rank; ++i) {
    RankOnePiece p{randomDivisorClass(s, divisor->model()), {}};
    for (const auto& id : divisor->ids()) p.eigenvalues[id] = s.rational(11, 6);
    pieces.push_back(std::move(p));
  }
  return AbelianLogConnection(std::move(pieces));
}

// ---------------------------------------------------------------------------
// complexes

namespace {

struct TermLayout {
  std::size_t h = 0, in = 0, out = 0, jumpIn = 0, jumpOut = 0;
  std::size_t rank() const { return h + in + out + jumpIn + jumpOut; }
  std::size_t inAt() const { return h; }
  std::size_t outAt() const { return h + in; }
  std::size_t jumpInAt() const { return h + in + out; }
  std::size_t jumpOutAt() const { return h + in + out + jumpIn; }
};

Poly smallPoly(Sampler& s, int maxDegree) {
  std::vector<Rational> c;
  for (int k = 0; k <= maxDegree; ++k) c.push_back(s.integer(0, 2) == 0 ? Rational(0) : s.rational(3, 2));
  return Poly(std::move(c));
}

PolyMatrix randomPolyMatrix(Sampler& s, std::size_t rows, std::size_t cols, int maxDegree) {
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (s.integer(0, 2) == 0) m(i, j) = smallPoly(s, maxDegree);
  return m;
}

// Unimodular change of frame and its inverse: a product of elementary matrices.
std::pair<PolyMatrix, PolyMatrix> randomGauge(Sampler& s, std::size_t n) {
  PolyMatrix g = PolyMatrix::identity(n), inv = PolyMatrix::identity(n);
  if (n < 2) return {g, inv};
  const long factors = s.integer(0, 2);
  for (long f = 0; f < factors; ++f) {
    const auto row = static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 1));
    auto col = static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 2));
    if (col >= row) ++col;
    const Poly c = Poly::t(static_cast<unsigned>(s.integer(0, 1))) * Poly(s.rational(2, 2));
    PolyMatrix e = PolyMatrix::identity(n), einv = PolyMatrix::identity(n);
    e(row, col) = c;
    einv(row, col) = -c;
    g = g * e;
    inv = einv * inv;
  }
  return {g, inv};
}

std::optional<LogComplex> attempt(Sampler& s, const ComplexRecipe& recipe, bool allowGauge) {
  const std::size_t n = static_cast<std::size_t>(s.integer(1, 3));
  std::vector<TermLayout> layout(n);
  for (std::size_t i = 0; i < n; ++i) {
    layout[i].h = static_cast<std::size_t>(s.integer(0, 2));
    if (i + 1 < n) {
      layout[i].out = static_cast<std::size_t>(s.integer(0, 1));
      layout[i + 1].in = layout[i].out;
      if (recipe.rankJumps) {
        layout[i].jumpOut = 1;
        layout[i + 1].jumpIn = 1;
      }
    }
  }
  if (recipe.rankJumps && n == 1) {
    layout.emplace_back();
    layout[0].jumpOut = layout[1].jumpIn = 1;
  }
  const std::size_t terms = layout.size();
  for (const auto& l : layout)
    if (l.rank() > 4) return std::nullopt;

  LogComplexData c;
  for (const auto& l : layout) c.ranks.push_back(l.rank());

  // Block-diagonal model.
  std::vector<Rational> jumpEigen(terms);
  std::vector<long> jumpPower(terms);
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    PolyMatrix d(layout[i + 1].rank(), layout[i].rank());
    for (std::size_t k = 0; k < layout[i].out; ++k) d(layout[i + 1].inAt() + k, layout[i].outAt() + k) = Poly(Rational(1));
    if (layout[i].jumpOut) {
      jumpPower[i] = s.integer(1, 2);
      jumpEigen[i] = s.integer(0, 2) == 0 ? Rational(0) : s.rational(3, 2);
      d(layout[i + 1].jumpInAt(), layout[i].jumpOutAt()) = Poly::t(static_cast<unsigned>(jumpPower[i]));
    }
    c.d.push_back(std::move(d));
  }
  std::vector<PolyMatrix> outBlock(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const TermLayout& l = layout[i];
    PolyMatrix m0 = PolyMatrix::identity(l.rank());
    PolyMatrix m1(l.rank(), l.rank());
    // Cohomology block: strictly upper triangular residue (plus a diagonal
    // entry when the recipe asks for a non-nilpotent one).
    for (std::size_t a = 0; a < l.h; ++a)
      for (std::size_t b = a + 1; b < l.h; ++b) m1(a, b) = Poly(s.rational(3, 2));
    if (!recipe.nilpotentResidue && l.h > 0) m1(0, 0) = Poly(makeRational(s.integer(1, 3), s.integer(1, 2)));
    if (!recipe.identityScalars && l.h > 0) m0(0, 0) = Poly(Rational(2));
    // Contractible pairs carry an arbitrary action, the same on both ends.
    if (l.out > 0) {
      outBlock[i] = randomPolyMatrix(s, l.out, l.out, 0);
      for (std::size_t a = 0; a < l.out; ++a)
        for (std::size_t b = 0; b < l.out; ++b) m1(l.outAt() + a, l.outAt() + b) = outBlock[i](a, b);
    }
    if (l.in > 0)
      for (std::size_t a = 0; a < l.in; ++a)
        for (std::size_t b = 0; b < l.in; ++b) m1(l.inAt() + a, l.inAt() + b) = outBlock[i - 1](a, b);
    // t^k pairs: source eigenvalue a, target a - k.
    if (l.jumpOut) m1(l.jumpOutAt(), l.jumpOutAt()) = Poly(jumpEigen[i]);
    if (l.jumpIn) m1(l.jumpInAt(), l.jumpInAt()) = Poly(jumpEigen[i - 1] - jumpPower[i - 1]);
    c.m0.push_back(std::move(m0));
    c.m1.push_back(std::move(m1));
  }

  // Chain homotopies: M += d K + K d.
  for (auto* action : {&c.m0, &c.m1}) {
    std::vector<PolyMatrix> k(terms);
    for (std::size_t i = 1; i < terms; ++i) k[i] = randomPolyMatrix(s, c.ranks[i - 1], c.ranks[i], 0);
    for (std::size_t i = 0; i < terms; ++i) {
      PolyMatrix extra(c.ranks[i], c.ranks[i]);
      if (i > 0) extra = extra + c.d[i - 1] * k[i];
      if (i + 1 < terms) extra = extra + k[i + 1] * c.d[i];
      (*action)[i] = (*action)[i] + extra;
    }
  }

  // Change of frame F^i = G_i F'^i.
  if (allowGauge) {
    std::vector<std::pair<PolyMatrix, PolyMatrix>> gauge;
    for (std::size_t i = 0; i < terms; ++i) gauge.push_back(randomGauge(s, c.ranks[i]));
    for (std::size_t i = 0; i + 1 < terms; ++i) c.d[i] = gauge[i + 1].second * c.d[i] * gauge[i].first;
    for (std::size_t i = 0; i < terms; ++i) {
      const auto& [g, ginv] = gauge[i];
      c.m0[i] = ginv * c.m0[i] * g;
      c.m1[i] = ginv * c.m1[i] * g + ginv * g.derivative().timesT();
    }
  }

  int maxDeg = 0;
  for (const auto* list : {&c.d, &c.m0, &c.m1})
    for (const auto& m : *list) maxDeg = std::max(maxDeg, m.maxDegree());
  if (maxDeg + 2 > 6) return std::nullopt;
  c.order = static_cast<int>(std::max<long>(maxDeg + 2, s.integer(2, 6)));
  return LogComplex::create(std::move(c));
}

}  // namespace

LogComplex randomLogComplex(Sampler& s, const ComplexRecipe& recipe) {
  for (int tries = 0; tries < 64; ++tries)
    if (auto c = attempt(s, recipe, true)) return std::move(*c);
  for (;;)
    if (auto c = attempt(s, recipe, false)) return std::move(*c);
}

}  // namespace parchern
