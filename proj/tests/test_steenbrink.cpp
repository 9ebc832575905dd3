#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parchern/corpus.hpp"
#include "parchern/errors.hpp"
#include "parchern/sampling.hpp"
#include "parchern/steenbrink.hpp"

using namespace parchern;

namespace {

PolyMatrix scalar(const Poly& p) {
  PolyMatrix m(1, 1);
  m(0, 0) = p;
  return m;
}

// Fiber ranks by direct evaluation.
std::vector<long> oracleRanks(const LogComplex& c, Fiber fiber) {
  std::vector<long> rk(c.d().size());
  for (std::size_t i = 0; i < c.d().size(); ++i)
    rk[i] = static_cast<long>(fiber == Fiber::Origin ? oracle::rank(c.d()[i].atZero()) : oracle::genericRank(c.d()[i]));
  std::vector<long> h;
  for (std::size_t i = 0; i < c.length(); ++i) {
    long v = static_cast<long>(c.ranks()[i]);
    if (i < rk.size()) v -= rk[i];
    if (i > 0) v -= rk[i - 1];
    h.push_back(v);
  }
  return h;
}

}  // namespace

TEST(SeriesRing, OrderAtLeastTwo) {
  EXPECT_THROW(TruncatedSeriesRing(1), InvalidInput);
  EXPECT_EQ(TruncatedSeriesRing(4).order(), 4);
}

TEST(Fixtures, TrivialAcyclicAndTrap) {
  const Corpus& corpus = Corpus::instance();
  const SteenbrinkVerdict trivial = verdict(corpus.complex("trivial"));
  EXPECT_EQ(trivial.status, VerdictStatus::Pass);
  EXPECT_EQ(trivial.originRanks, (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(trivial.genericRanks, trivial.originRanks);

  const SteenbrinkVerdict acyclic = verdict(corpus.complex("acyclic"));
  EXPECT_EQ(acyclic.status, VerdictStatus::Pass);
  EXPECT_EQ(acyclic.originRanks, (std::vector<long>{0, 0}));

  const LogComplex& trap = corpus.complex("t-multiplication");
  const SteenbrinkVerdict v = verdict(trap);
  EXPECT_EQ(v.status, VerdictStatus::HypothesisFailure);
  EXPECT_FALSE(v.hypotheses.residueNilpotent);
  EXPECT_TRUE(v.hypotheses.m0Identity);
  EXPECT_EQ(v.originRanks, (std::vector<long>{1, 1}));
  EXPECT_EQ(v.genericRanks, (std::vector<long>{0, 0}));
  EXPECT_EQ(eulerCharacteristic(v.originRanks), eulerCharacteristic(v.genericRanks));
  ASSERT_EQ(v.hypotheses.residueCharPolys.size(), 2u);
  EXPECT_EQ(charPolyString(v.hypotheses.residueCharPolys[0]), "x");
  EXPECT_EQ(charPolyString(v.hypotheses.residueCharPolys[1]), "x + 1");
}

TEST(Validation, RejectsInconsistentData) {
  auto base = [] {
    LogComplexData c;
    c.order = 3;
    c.ranks = {1, 1};
    c.d = {scalar(Poly::t())};
    c.m0 = {PolyMatrix::identity(1), PolyMatrix::identity(1)};
    c.m1 = {scalar(Poly()), scalar(Poly(Rational(-1)))};
    return c;
  };
  EXPECT_NO_THROW(LogComplex::create(base()));
  LogComplexData wrongM1 = base();
  wrongM1.m1[1] = scalar(Poly());
  EXPECT_THROW(LogComplex::create(wrongM1), InvalidInput);
  LogComplexData degree = base();
  degree.order = 2;
  EXPECT_THROW(LogComplex::create(degree), InvalidInput);
  LogComplexData shape = base();
  shape.d = {PolyMatrix(2, 1)};
  EXPECT_THROW(LogComplex::create(shape), InvalidInput);
  LogComplexData notChain = base();
  notChain.m0[1] = scalar(Poly(Rational(2)));
  EXPECT_THROW(LogComplex::create(notChain), InvalidInput);
  LogComplexData dd;
  dd.order = 2;
  dd.ranks = {1, 1, 1};
  dd.d = {scalar(Poly(Rational(1))), scalar(Poly(Rational(1)))};
  dd.m0 = {PolyMatrix::identity(1), PolyMatrix::identity(1), PolyMatrix::identity(1)};
  dd.m1 = {PolyMatrix(1, 1), PolyMatrix(1, 1), PolyMatrix(1, 1)};
  EXPECT_THROW(LogComplex::create(dd), InvalidInput);
}

TEST(Hypotheses, ScalarAndResidueFailures) {
  LogComplexData c;
  c.order = 2;
  c.ranks = {2};
  c.m0 = {PolyMatrix::identity(2)};
  c.m1 = {PolyMatrix(2, 2)};
  c.m1[0](0, 1) = Poly(Rational(5));
  EXPECT_EQ(verdict(LogComplex::create(c)).status, VerdictStatus::Pass);
  LogComplexData scaled = c;
  scaled.m0[0](1, 1) = Poly(Rational(3));
  const HypothesisReport h = checkHypotheses(LogComplex::create(scaled));
  EXPECT_FALSE(h.m0Identity);
  LogComplexData eigen = c;
  eigen.m1[0](1, 1) = Poly(makeRational(1, 2));
  EXPECT_FALSE(checkHypotheses(LogComplex::create(eigen)).residueNilpotent);
  EXPECT_EQ(verdict(LogComplex::create(eigen)).status, VerdictStatus::HypothesisFailure);
}

TEST(GenericRank, AgreesWithEvaluationOracle) {
  Sampler s(401);
  for (int i = 0; i < 200; ++i) {
    const auto r = static_cast<std::size_t>(s.integer(1, 4)), c = static_cast<std::size_t>(s.integer(1, 4));
    PolyMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (s.integer(0, 2) != 0) m(a, b) = Poly({s.rational(3, 2), s.rational(3, 2), s.rational(3, 2)});
    // Force some rank drops.
    if (r > 1 && s.coin())
      for (std::size_t b = 0; b < c; ++b) m(r - 1, b) = m(0, b) * Poly({Rational(1), Rational(1)});
    EXPECT_EQ(genericRank(m), oracle::genericRank(m));
  }
}

TEST(SteenbrinkProperties, HypothesisPassingComplexesHaveConstantRanks) {
  Sampler s(402);
  long violations = 0;
  for (int i = 0; i < 150; ++i) {
    const LogComplex c = randomLogComplex(s);
    EXPECT_LE(c.order(), 6);
    for (auto r : c.ranks()) EXPECT_LE(r, 4u);
    const SteenbrinkVerdict v = verdict(c);
    EXPECT_EQ(v.status, VerdictStatus::Pass) << v.message;
    EXPECT_EQ(v.originRanks, v.genericRanks);
    EXPECT_EQ(v.originRanks, oracleRanks(c, Fiber::Origin));
    EXPECT_EQ(v.genericRanks, oracleRanks(c, Fiber::Generic));
    violations += v.status == VerdictStatus::TheoremViolation;
  }
  EXPECT_EQ(violations, 0);
}

TEST(SteenbrinkProperties, FailingRecipesAreRejected) {
  Sampler s(403);
  for (int i = 0; i < 150; ++i) {
    ComplexRecipe recipe;
    switch (i % 3) {
      case 0: recipe.rankJumps = true; break;
      case 1: recipe.nilpotentResidue = false; break;
      default: recipe.identityScalars = false; break;
    }
    const LogComplex c = randomLogComplex(s, recipe);
    const SteenbrinkVerdict v = verdict(c);
    EXPECT_NE(v.status, VerdictStatus::TheoremViolation);
    EXPECT_EQ(eulerCharacteristic(v.originRanks), eulerCharacteristic(v.genericRanks));
    EXPECT_EQ(v.originRanks, oracleRanks(c, Fiber::Origin));
    EXPECT_EQ(v.genericRanks, oracleRanks(c, Fiber::Generic));
    if (recipe.rankJumps) {
      EXPECT_EQ(v.status, VerdictStatus::HypothesisFailure);
      EXPECT_NE(v.originRanks, v.genericRanks);
    }
  }
}
