#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parchern/corpus.hpp"
#include "parchern/errors.hpp"
#include "parchern/parabolic.hpp"
#include "parchern/sampling.hpp"

using namespace parchern;
using oracle::q;

namespace {

DivisorPtr whole(const std::string& name) { return NormalCrossingsDivisor::whole(Corpus::instance().model(name)); }

ParabolicKClass line(const DivisorPtr& d, const RationalDivisor& b) { return ParabolicKClass::lineBundle(d, b); }

const std::vector<std::string> kModels{"P1", "P2", "P1xP1", "BlP2", "Bl(SxP1)", "SxP1.r4", "P1.cover"};

DivisorPtr randomDivisor(Sampler& s) { return whole(kModels[static_cast<std::size_t>(s.integer(0, kModels.size() - 1))]); }

}  // namespace

TEST(Constituent, WorkedExamples) {
  const DivisorPtr p1 = whole("P1");
  const ParabolicKClass f = line(p1, {{"p0", q("1/2")}});
  EXPECT_TRUE(sameTerms(constituent(f, {}), ParabolicKClass::trivial(p1, 1)));
  EXPECT_TRUE(sameTerms(constituent(f, {{{"p0", q("1/2")}}}), line(p1, {{"p0", 1}})));
  const DivisorPtr d = whole("P1xP1");
  const ParabolicKClass g = line(d, {{"F0", q("-1/4")}, {"F1", q("3/4")}});
  EXPECT_TRUE(sameTerms(constituent(g, {{{"F0", q("1/4")}, {"F1", q("1/4")}}}), line(d, {{"F1", 1}})));
}

TEST(Constituent, FloorIncludesTheIntegerItself) {
  const DivisorPtr p1 = whole("P1");
  EXPECT_TRUE(sameTerms(constituent(line(p1, {{"p0", q("1/3")}}), {{{"p0", q("2/3")}}}), line(p1, {{"p0", 1}})));
  EXPECT_TRUE(sameTerms(constituent(line(p1, {{"p0", q("-1/3")}}), {{{"p0", q("1/3")}}}), ParabolicKClass::trivial(p1, 1)));
  EXPECT_TRUE(sameTerms(constituent(line(p1, {{"p0", q("-1/3")}}), {{{"p0", q("1/3") - q("1/1000")}}}),
                        line(p1, {{"p0", -1}})));
  EXPECT_TRUE(sameTerms(constituent(line(p1, {{"p0", -2}}), {}), line(p1, {{"p0", -2}})));
}

TEST(Tensor, WorkedExamples) {
  const DivisorPtr p1 = whole("P1");
  const ParabolicKClass h = line(p1, {{"p0", q("1/2")}});
  EXPECT_TRUE(sameTerms(tensorPar(h, h), line(p1, {{"p0", 1}})));
  const ChowElement pt = p1->model()->basisElement("pt");
  const ParabolicKClass b = ParabolicKClass::lineBundle(p1, pt, {{"p0", q("2/3")}, {"pinf", q("-5/2")}});
  const ParabolicKClass binv = ParabolicKClass::lineBundle(p1, -pt, {{"p0", q("-2/3")}, {"pinf", q("5/2")}});
  EXPECT_TRUE(sameTerms(tensorPar(b, binv), ParabolicKClass::trivial(p1, 1)));
  const ParabolicKClass m = line(p1, {{"pinf", q("1/4")}});
  EXPECT_TRUE(sameTerms(tensorPar(h + b, m), tensorPar(h, m) + tensorPar(b, m)));
  EXPECT_THROW(tensorPar(h, line(whole("P2"), {})), ModelMismatch);
}

TEST(ChPar, WorkedExamples) {
  const DivisorPtr p1 = whole("P1"), p2 = whole("P2");
  EXPECT_EQ(chPar(line(p1, {{"p0", q("1/2")}})), p1->model()->element({{"1", 1}, {"pt", q("1/2")}}));
  EXPECT_EQ(chPar(line(p2, {{"L", q("1/2")}}) + line(p2, {{"L", q("-1/2")}})),
            p2->model()->element({{"1", 2}, {"h2", q("1/4")}}));
  EXPECT_EQ(chPar(ParabolicKClass::trivial(p2, 5)), 5 * p2->model()->one());
}

TEST(ChPar, EqualCharactersDoNotMergeClasses) {
  const DivisorPtr p1 = whole("P1");
  const ParabolicKClass a = line(p1, {{"p0", q("1/2")}}), b = line(p1, {{"pinf", q("1/2")}});
  EXPECT_EQ(chPar(a), chPar(b));
  EXPECT_FALSE(sameTerms(a, b));
  ParabolicKClass twice(p1);
  twice.add(1, a.terms()[0].bundle);
  twice.add(1, a.terms()[0].bundle);
  EXPECT_EQ(twice.terms().size(), 2u);
  ParabolicKClass doubled(p1);
  doubled.add(2, a.terms()[0].bundle);
  EXPECT_TRUE(sameTerms(twice, doubled));
}

TEST(Weights, WorkedExamples) {
  const DivisorPtr p1 = whole("P1");
  EXPECT_EQ(weightsAlong(line(p1, {{"p0", q("1/2")}}), "p0"), (WeightMultiset{{q("1/2"), 1}}));
  EXPECT_EQ(weightsAlong(line(p1, {{"p0", 1}}), "p0"), (WeightMultiset{{Rational(0), 1}}));
  EXPECT_EQ(weightsAlong(line(p1, {{"p0", q("-1/4")}}) + line(p1, {{"p0", q("3/4")}}), "p0"),
            (WeightMultiset{{q("3/4"), 2}}));
  EXPECT_THROW(weightsAlong(line(p1, {}), "q"), DomainError);
}

TEST(DiffOverD, WorkedExamples) {
  const DivisorPtr p1 = whole("P1"), p2 = whole("P2");
  const auto a = diffOverD(line(p1, {{"p0", q("1/2")}}), {});
  EXPECT_TRUE(a.supportedOnD);
  EXPECT_EQ(a.difference, p1->model()->element({{"pt", q("1/2")}}));
  const auto b = diffOverD(line(p1, {{"p0", 3}}), {{{"p0", q("1/2")}, {"pinf", q("3/4")}}});
  EXPECT_TRUE(b.supportedOnD);
  EXPECT_TRUE(b.difference.isZero());
  const auto c = diffOverD(line(p2, {{"L", q("1/2")}}), {});
  EXPECT_TRUE(c.supportedOnD);
  EXPECT_EQ(c.difference, p2->model()->element({{"h", q("1/2")}, {"h2", q("1/8")}}));
}

TEST(Pullback, WorkedExamples) {
  const Corpus& corpus = Corpus::instance();
  const DivisorPullback& cover = corpus.doubleCover();
  const ParabolicKClass up = pullbackPar(cover, line(cover.below(), {{"p0", q("1/2")}}));
  EXPECT_TRUE(sameTerms(up, line(cover.above(), {{"p0", 1}})));
  EXPECT_EQ(weightsAlong(up, "p0"), (WeightMultiset{{Rational(0), 1}}));
  const ParabolicKClass f = line(cover.below(), {{"pinf", q("-7/5")}});
  EXPECT_TRUE(sameTerms(pullbackPar(DivisorPullback::identity(cover.below()), f), f));
  const DivisorPullback& blow = corpus.blowup();
  EXPECT_TRUE(sameTerms(pullbackPar(blow, line(blow.below(), {{"L", q("1/2")}})),
                        line(blow.above(), {{"Lt", q("1/2")}, {"E", q("1/2")}})));
}

TEST(Pullback, InconsistentComponentMapIsRejected) {
  const Corpus& corpus = Corpus::instance();
  const DivisorPullback& blow = corpus.blowup();
  EXPECT_THROW(DivisorPullback(blow.map(), blow.below(), blow.above(), {{"L", RationalDivisor{{"Lt", 1}}}}),
               InvalidInput);
  EXPECT_THROW(DivisorPullback(blow.map(), blow.below(), blow.above(),
                               {{"L", RationalDivisor{{"Lt", q("1/2")}, {"E", q("1/2")}}}}),
               InvalidInput);
}

TEST(ParabolicProperties, ChParFormulaAdditivityMultiplicativity) {
  Sampler s(101);
  for (int i = 0; i < 250; ++i) {
    const DivisorPtr d = randomDivisor(s);
    const ParabolicLineBundle lb = randomLineBundle(s, d);
    ChowElement exponent = lb.c1;
    for (const auto& [id, b] : lb.twist.coefficients()) exponent += b * d->classOf(id);
    EXPECT_EQ(chPar(ParabolicKClass::lineBundle(d, lb.c1, lb.twist)), oracle::exp(exponent));
    const ParabolicKClass f = randomBundle(s, d), g = randomBundle(s, d);
    EXPECT_EQ(chPar(f + g), chPar(f) + chPar(g));
    EXPECT_EQ(chPar(tensorPar(f, g)), mul(chPar(f), chPar(g)));
    EXPECT_EQ(gradedPart(chPar(f), 0), Rational(f.rank()) * d->model()->one());
  }
}

TEST(ParabolicProperties, NormalizationAndSemicontinuity) {
  Sampler s(102);
  for (int i = 0; i < 250; ++i) {
    const DivisorPtr d = randomDivisor(s);
    const ParabolicKClass f = randomBundle(s, d);
    const MultiIndex beta = randomMultiIndex(s, d);
    for (const auto& id : d->ids())
      EXPECT_TRUE(sameTerms(constituent(f, beta + MultiIndex::unit(id)), tensorPar(constituent(f, beta), line(d, {{id, 1}}))));
    Rational gap(1);
    for (const auto& t : f.terms())
      for (const auto& id : d->ids()) {
        const Rational x = t.bundle.twist.at(id) + beta.at(id);
        gap = std::min(gap, Rational(Rational(floorOf(x) + 1) - x));
      }
    MultiIndex eps;
    for (const auto& id : d->ids()) eps.entries[id] = gap * makeRational(s.integer(0, 9), 10);
    EXPECT_TRUE(sameTerms(constituent(f, beta + eps), constituent(f, beta)));
  }
}

TEST(ParabolicProperties, DifferenceInIdealAndDegreeZero) {
  Sampler s(103);
  for (int i = 0; i < 250; ++i) {
    const DivisorPtr d = randomDivisor(s);
    const ParabolicKClass f = randomBundle(s, d);
    const MultiIndex alpha = randomMultiIndex(s, d);
    const auto r = diffOverD(f, alpha);
    EXPECT_TRUE(r.supportedOnD);
    EXPECT_EQ(r.difference, chPar(f) - chPar(constituent(f, alpha)));
    EXPECT_TRUE(r.difference.inDegreeZero() == r.difference.isZero());
  }
  // chPar in degree 0 forces the constituents' characters into rank + ideal(D).
  const DivisorPtr p2 = whole("P2");
  for (int i = 0; i < 100; ++i) {
    const Rational b = s.rational(9, 5);
    const ChowElement c1 = randomDivisorClass(s, p2->model());
    ParabolicKClass f(p2);
    f.add(2, {c1, {{"L", b}}});
    f.add(-2, {c1, {{"M", b}}});
    ASSERT_TRUE(chPar(f).inDegreeZero());
    const ChowElement x = chPar(constituent(f, randomMultiIndex(s, p2))) - Rational(f.rank()) * p2->model()->one();
    EXPECT_TRUE(idealMembership(x, p2->ids()));
  }
}

TEST(ParabolicProperties, PullbackCommutesAndComposes) {
  Sampler s(104);
  const Corpus& corpus = Corpus::instance();
  const DivisorPullback composite = compose(corpus.doubleCoverAbove(), corpus.doubleCover());
  for (const DivisorPullback* f : {&corpus.doubleCover(), &corpus.blowup(), &corpus.fiberRestriction()})
    for (int i = 0; i < 60; ++i) {
      const ParabolicKClass g = randomBundle(s, f->below());
      EXPECT_EQ(chPar(pullbackPar(*f, g)), applyMap(f->map(), chPar(g)));
    }
  for (int i = 0; i < 60; ++i) {
    const ParabolicKClass g = randomBundle(s, corpus.doubleCover().below());
    EXPECT_TRUE(sameTerms(pullbackPar(composite, g), pullbackPar(corpus.doubleCoverAbove(), pullbackPar(corpus.doubleCover(), g))));
  }
  EXPECT_THROW(compose(corpus.doubleCover(), corpus.doubleCoverAbove()), ModelMismatch);
}

TEST(ParabolicProperties, WeightsAreFractionalParts) {
  Sampler s(105);
  for (int i = 0; i < 200; ++i) {
    const DivisorPtr d = randomDivisor(s);
    const ParabolicKClass f = randomBundle(s, d);
    for (const auto& id : d->ids()) {
      long total = 0;
      for (const auto& [w, m] : weightsAlong(f, id)) {
        EXPECT_GE(w, 0);
        EXPECT_LT(w, 1);
        total += m;
      }
      EXPECT_EQ(total, f.rank());
    }
  }
}
