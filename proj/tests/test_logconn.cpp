#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parchern/corpus.hpp"
#include "parchern/errors.hpp"
#include "parchern/logconn.hpp"
#include "parchern/sampling.hpp"

using namespace parchern;
using oracle::q;

namespace {

DivisorPtr whole(const std::string& name) { return NormalCrossingsDivisor::whole(Corpus::instance().model(name)); }

ResidueSpectrum single(const Rational& lambda) { return ResidueSpectrum({{"D", {{lambda, 1}}}}); }

}  // namespace

TEST(Normalize, WorkedExamples) {
  const auto a = normalizeEigenvalue(0);
  EXPECT_EQ(a.value, 0);
  EXPECT_EQ(a.shift, 0);
  const auto b = normalizeEigenvalue(q("-1/2"));
  EXPECT_EQ(b.value, q("-1/2"));
  EXPECT_EQ(b.shift, 0);
  const auto c = normalizeEigenvalue(q("3/2"));
  EXPECT_EQ(c.value, q("-1/2"));
  EXPECT_EQ(c.shift, 2);
  const auto d = normalizeEigenvalue(-1);
  EXPECT_EQ(d.value, 0);
  EXPECT_EQ(d.shift, -1);
}

TEST(Weights, WorkedExamples) {
  EXPECT_EQ(associatedWeights(single(q("-1/2")), "D"), (WeightMultiset{{q("1/2"), 1}}));
  EXPECT_EQ(associatedWeights(single(0), "D"), (WeightMultiset{{Rational(0), 1}}));
  EXPECT_EQ(associatedWeights(single(q("3/4")), "D"), (WeightMultiset{{q("1/4"), 1}}));
  EXPECT_THROW(associatedWeights(single(0), "E"), DomainError);
}

TEST(Window, WorkedExamples) {
  EXPECT_EQ(representativeInWindow(q("-1/2"), q("3/4")), q("-1/2"));
  EXPECT_EQ(representativeInWindow(0, 0), 0);
  EXPECT_EQ(representativeInWindow(q("-3/4"), q("1/2")), q("1/4"));
  EXPECT_EQ(representativeInWindow(1, 0), 0);
  EXPECT_EQ(representativeInWindow(q("3/2"), q("1/2")), q("-1/2"));
}

TEST(PositiveIntegers, WorkedExamples) {
  EXPECT_TRUE(positiveIntegerEigenvalueCheck(ResidueSpectrum({{"D", {{0, 1}, {q("-1/2"), 1}, {q("-1/3"), 2}}}})));
  EXPECT_FALSE(positiveIntegerEigenvalueCheck(ResidueSpectrum({{"D", {{2, 1}}}, {"E", {{0, 1}}}})));
  EXPECT_TRUE(positiveIntegerEigenvalueCheck(ResidueSpectrum({{"D", {{-3, 1}, {q("5/2"), 1}}}})));
}

TEST(AssociatedParabolic, WorkedExamples) {
  const DivisorPtr p1 = whole("P1");
  const ModelPtr m = p1->model();
  const AbelianLogConnection trivial({{m->zero(), {}}, {m->zero(), {}}});
  EXPECT_TRUE(sameTerms(associatedParabolic(trivial, p1), ParabolicKClass::trivial(p1, 2)));
  const AbelianLogConnection lefschetz({{m->zero(), {{"p0", 0}}}, {m->zero(), {{"p0", q("-1/2")}}}});
  EXPECT_TRUE(sameTerms(associatedParabolic(lefschetz, p1),
                        ParabolicKClass::trivial(p1, 1) + ParabolicKClass::lineBundle(p1, {{"p0", q("1/2")}})));
  const AbelianLogConnection shifted({{m->basisElement("pt"), {{"p0", q("3/2")}}}});
  const ParabolicKClass f = associatedParabolic(shifted, p1);
  EXPECT_TRUE(sameTerms(f, ParabolicKClass::lineBundle(p1, m->basisElement("pt"), {{"p0", q("1/2")}})));
  const Rational w = q("1/2");
  const Rational rep = representativeInWindow(q("3/2"), w);
  EXPECT_LE(-w, rep);
  EXPECT_LT(rep, 1 - w);
}

TEST(LogConnProperties, WindowCongruenceTranslation) {
  Sampler s(201);
  for (int i = 0; i < 400; ++i) {
    const Rational lambda = s.rational(20, 8), alpha = s.rational(8, 8);
    const Rational rep = representativeInWindow(lambda, alpha);
    EXPECT_LE(-alpha, rep);
    EXPECT_LT(rep, 1 - alpha);
    EXPECT_TRUE(isInteger(rep - lambda));
    const long n = s.integer(-5, 5);
    EXPECT_EQ(representativeInWindow(lambda + n, alpha), rep);
    EXPECT_EQ(associatedWeights(single(lambda + n), "D"), associatedWeights(single(lambda), "D"));
    const auto w = associatedWeights(single(lambda), "D");
    ASSERT_EQ(w.size(), 1u);
    EXPECT_TRUE(isInteger(w.begin()->first + lambda));
    const auto norm = normalizeEigenvalue(lambda);
    EXPECT_EQ(norm.value + Rational(norm.shift), lambda);
    EXPECT_GT(norm.value, -1);
    EXPECT_LE(norm.value, 0);
  }
  for (int i = 0; i < 200; ++i) {
    const Rational alpha = makeRational(s.integer(1, 12), 12);
    const Rational rep = representativeInWindow(s.rational(30, 6), alpha);
    EXPECT_FALSE(isInteger(rep) && rep > 0);
  }
}

TEST(LogConnProperties, DirectSumsPermutationsRestriction) {
  Sampler s(202);
  const DivisorPtr quad = whole("P1xP1");
  const DivisorPullback& restrict = Corpus::instance().fiberRestriction();
  for (int i = 0; i < 200; ++i) {
    const AbelianLogConnection e = randomConnection(s, quad), f = randomConnection(s, quad);
    EXPECT_TRUE(sameTerms(associatedParabolic(e + f, quad), associatedParabolic(e, quad) + associatedParabolic(f, quad)));
    std::vector<RankOnePiece> reversed(e.pieces().rbegin(), e.pieces().rend());
    EXPECT_TRUE(sameTerms(associatedParabolic(AbelianLogConnection(reversed), quad), associatedParabolic(e, quad)));
    EXPECT_TRUE(sameTerms(pullbackPar(restrict, associatedParabolic(e, quad)),
                          associatedParabolic(pullbackConnection(restrict, e), restrict.above())));
    const ParabolicKClass par = associatedParabolic(e, quad);
    for (const auto& id : quad->ids()) {
      EXPECT_EQ(weightsAlong(par, id), associatedWeights(e.spectrum(quad->ids()), id));
      for (const auto& t : par.terms()) {
        EXPECT_GE(t.bundle.twist.at(id), 0);
        EXPECT_LT(t.bundle.twist.at(id), 1);
      }
    }
    EXPECT_EQ(e.spectrum(quad->ids()).multiplicity("F0"), e.rank());
  }
}
