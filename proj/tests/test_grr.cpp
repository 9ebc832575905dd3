#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parchern/corpus.hpp"
#include "parchern/errors.hpp"
#include "parchern/grr.hpp"
#include "parchern/parabolic.hpp"
#include "parchern/sampling.hpp"

using namespace parchern;
using oracle::q;

TEST(Chi, ClassicalRiemannRoch) {
  const FamilyModel& fam = Corpus::instance().projectiveLineOverPoint();
  const ModelPtr t = fam.total();
  const ChowElement pt = t->basisElement("pt");
  EXPECT_EQ(chi(fam, t->one()), fam.base()->one());
  EXPECT_TRUE(chi(fam, oracle::exp(-pt)).isZero());
  EXPECT_TRUE(chi(fam, t->zero()).isZero());
  for (long d = -4; d <= 4; ++d) EXPECT_EQ(chi(fam, expClass(Rational(d) * pt)), Rational(d + 1) * fam.base()->one()) << d;
  EXPECT_THROW(chi(fam, Corpus::instance().model("P2")->one()), ModelMismatch);
}

TEST(LogDeRham, WorkedExamples) {
  const Corpus& corpus = Corpus::instance();
  EXPECT_EQ(logDeRhamEuler(corpus.pointedCurves(3), corpus.pointedCurves(3).total()->one()),
            -corpus.pointedCurves(3).base()->one());
  EXPECT_TRUE(logDeRhamEuler(corpus.pointedCurves(2), corpus.pointedCurves(2).total()->one()).isZero());
  EXPECT_TRUE(logDeRhamEuler(corpus.pointedCurves(3), corpus.pointedCurves(3).total()->zero()).isZero());
}

TEST(LogDeRham, EulerIsTwoMinusRForEveryR) {
  for (int r = 2; r <= 10; ++r) {
    const FamilyModel& fam = Corpus::instance().pointedCurves(r);
    const ChowElement e = logDeRhamEuler(fam, fam.total()->one());
    EXPECT_EQ(e, Rational(2 - r) * fam.base()->one()) << r;
    for (int k = 1; k <= fam.base()->dimension(); ++k) EXPECT_TRUE(gradedPart(e, k).isZero());
    for (const auto& id : fam.horizontal()) EXPECT_TRUE(residueIsoCheck(fam, id)) << r << " " << id;
  }
}

TEST(ResidueIso, WorkedExamples) {
  const Corpus& corpus = Corpus::instance();
  const FamilyModel& fam = corpus.pointedCurves(5);
  EXPECT_TRUE(residueIsoCheck(fam.withLogCotangent(fam.total()->zero()), "k1"));
  EXPECT_FALSE(residueIsoCheck(corpus.corruptedFamily(), "k1"));
  EXPECT_THROW(residueIsoCheck(fam, "f0"), DomainError);
  EXPECT_THROW(residueIsoCheck(fam, "k9"), DomainError);
}

TEST(SplitKR, WorkedExamples) {
  const FamilyModel& fam = Corpus::instance().pointedCurves(3);
  const ModelPtr t = fam.total();
  const KRSplit a = splitKR(fam, t->element({{"1", 2}, {"h", q("1/2")}}));
  EXPECT_EQ(a.r, 2);
  EXPECT_TRUE(a.kSupported);
  const KRSplit b = splitKR(fam, t->element({{"1", 2}, {"s", 1}}));
  EXPECT_FALSE(b.kSupported);
  EXPECT_EQ(b.k, t->basisElement("s"));
  const KRSplit c = splitKR(fam, 4 * t->one());
  EXPECT_TRUE(c.k.isZero());
  EXPECT_TRUE(c.kSupported);
}

TEST(MainIdentity, WorkedExamples) {
  const Corpus& corpus = Corpus::instance();
  const FamilyModel& fam = corpus.pointedCurves(3);
  const MainIdentityResult a = mainIdentity(fam, fam.total()->one());
  EXPECT_TRUE(a.preconditionsHold);
  EXPECT_TRUE(a.inCH0);
  EXPECT_EQ(a.result, -fam.base()->one());
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(*a.witness, -1);

  const DivisorPtr d = NormalCrossingsDivisor::whole(fam.total());
  const ParabolicKClass f = ParabolicKClass::trivial(d, 1) + ParabolicKClass::lineBundle(d, {{"k1", q("1/2")}});
  const MainIdentityResult b = mainIdentity(fam, chPar(f));
  EXPECT_TRUE(b.preconditionsHold);
  EXPECT_TRUE(b.inCH0);
  EXPECT_EQ(b.result, -2 * fam.base()->one());

  const MainIdentityResult c = mainIdentity(corpus.corruptedFamily(), corpus.corruptedFamily().total()->one());
  EXPECT_FALSE(c.preconditionsHold);
  EXPECT_NE(c.failure.find("k1"), std::string::npos);
  EXPECT_FALSE(c.witness.has_value());

  const MainIdentityResult e = mainIdentity(fam, fam.total()->element({{"1", 1}, {"s", 1}}));
  EXPECT_FALSE(e.preconditionsHold);
  EXPECT_FALSE(e.failure.empty());
}

TEST(BlowupFamily, HandOracle) {
  const FamilyModel& fam = Corpus::instance().blowupFamily();
  const ModelPtr t = fam.total(), base = fam.base();
  const ChowElement k1 = t->divisorClass("k1"), k2 = t->divisorClass("k2"), e = t->basisElement("e"),
                    s = t->basisElement("s"), pt = t->basisElement("pt");
  EXPECT_TRUE(mul(k1, k2).isZero());
  EXPECT_EQ(mul(k1, k1), -pt);
  EXPECT_EQ(mul(k2, k2), pt);
  EXPECT_EQ(mul(k1, e), pt);
  EXPECT_EQ(mul(k2, s), pt);
  EXPECT_TRUE(residueIsoCheck(fam, "k1"));
  EXPECT_TRUE(residueIsoCheck(fam, "k2"));
  EXPECT_EQ(chi(fam, t->one()), base->one());
  EXPECT_EQ(chi(fam, expClass(k1)), base->element({{"1", 2}, {"p", -1}}));
  EXPECT_TRUE(logDeRhamEuler(fam, t->one()).isZero());

  const ChowElement x = -4 * k1 - pt;
  const KRSplit split = splitKR(fam, x);
  EXPECT_EQ(split.r, 0);
  EXPECT_TRUE(split.kSupported);
  const MainIdentityResult mi = mainIdentity(fam, x);
  EXPECT_TRUE(mi.preconditionsHold);
  EXPECT_TRUE(mi.result.isZero());
}

TEST(FamilyValidation, RejectsBrokenData) {
  const Corpus& corpus = Corpus::instance();
  const FamilyModel& good = corpus.pointedCurves(3);
  auto data = [&] {
    FamilyData d;
    d.name = "x";
    d.total = good.total();
    d.base = good.base();
    d.pullbackBlocks = good.pullback().blocks();
    d.pushforwardBlocks = good.pushforward().blocks();
    d.toddRelative = good.toddRelative().coords();
    d.logCotangentC1 = good.logCotangentC1().coords();
    d.horizontal = good.horizontal();
    d.vertical = good.vertical();
    return d;
  };
  EXPECT_NO_THROW(FamilyModel::create(data()));
  FamilyData badTodd = data();
  badTodd.toddRelative[0] = 2;
  EXPECT_THROW(FamilyModel::create(badTodd), InvalidInput);
  FamilyData badPush = data();
  badPush.pushforwardBlocks = LinearMap::blocksFromImages(*good.total(), *good.base(), 1, {{"h", {{"1", 1}}}, {"sh", {{"p", 2}}}});
  EXPECT_THROW(FamilyModel::create(badPush), InvalidInput);
  FamilyData badComponent = data();
  badComponent.horizontal.push_back("nowhere");
  EXPECT_THROW(FamilyModel::create(badComponent), InvalidInput);
  FamilyData badC1 = data();
  badC1.logCotangentC1 = good.total()->element({{"sh", 1}}).coords();
  EXPECT_THROW(FamilyModel::create(badC1), InvalidInput);
}

TEST(GrrProperties, LinearityProjectionFirstPiece) {
  Sampler s(301);
  const Corpus& corpus = Corpus::instance();
  for (int i = 0; i < 200; ++i) {
    const int r = static_cast<int>(s.integer(2, 10));
    const FamilyModel& fam = i % 4 == 0 ? corpus.blowupFamily() : corpus.pointedCurves(r);
    const ModelPtr t = fam.total();
    const ChowElement x = randomElement(s, t), y = randomElement(s, t), b = randomElement(s, fam.base());
    const Rational a1 = s.rational(), a2 = s.rational();
    EXPECT_EQ(chi(fam, a1 * x + a2 * y), a1 * chi(fam, x) + a2 * chi(fam, y));
    EXPECT_EQ(chi(fam, mul(x, applyMap(fam.pullback(), b))), mul(chi(fam, x), b));
    ChowElement k = t->zero();
    for (const auto& id : fam.horizontal())
      if (s.coin()) k += mul(t->divisorClass(id), randomElement(s, t));
    ASSERT_TRUE(splitKR(fam, k).kSupported);
    EXPECT_TRUE(chi(fam, mul(k, t->one() - expClass(fam.logCotangentC1()))).isZero());
    const MainIdentityResult mi = mainIdentity(fam, x - Rational(x[0]) * t->one() + mul(k, t->one()) + 3 * t->one());
    if (mi.preconditionsHold) EXPECT_TRUE(mi.inCH0);
  }
}
