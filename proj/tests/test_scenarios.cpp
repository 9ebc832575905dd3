#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parchern/corpus.hpp"
#include "parchern/errors.hpp"
#include "parchern/scenarios.hpp"

using namespace parchern;
using oracle::q;

namespace {

const std::filesystem::path kData = PARCHERN_TEST_DATA;

std::string errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, ModelRoundTrip) {
  for (const auto& name : Corpus::instance().modelNames()) {
    const ModelPtr m = Corpus::instance().model(name);
    const json j = modelToJson(*m);
    const ModelPtr back = modelFromJson(j);
    EXPECT_EQ(modelToJson(*back).dump(), j.dump()) << name;
    EXPECT_EQ(back->divisorNames(), m->divisorNames());
  }
}

TEST(Json, ElementBundleComplexRoundTrip) {
  const ModelPtr p2 = Corpus::instance().model("P2");
  const ChowElement x = p2->element({{"1", q("-3/4")}, {"h2", 5}});
  EXPECT_EQ(elementFromJson(elementToJson(x), p2), x);
  EXPECT_EQ(elementToJson(x).dump(), R"({"1":"-3/4","h2":"5/1"})");
  EXPECT_EQ(elementFromJson(json::array({"1", 0, "1/2"}), p2), p2->element({{"1", 1}, {"h2", q("1/2")}}));

  const DivisorPtr d = NormalCrossingsDivisor::whole(p2);
  const ParabolicKClass f = ParabolicKClass::lineBundle(d, p2->basisElement("h"), {{"L", q("1/3")}}) +
                            ParabolicKClass::trivial(d, 2);
  ModelRegistry reg;
  EXPECT_TRUE(sameTerms(bundleFromJson(bundleToJson(f), reg), f));

  for (const auto& name : Corpus::instance().complexNames()) {
    const LogComplex& c = Corpus::instance().complex(name);
    EXPECT_EQ(complexToJson(complexFromJson(complexToJson(c))).dump(), complexToJson(c).dump());
  }
}

TEST(Json, ErrorsCarryLocations) {
  const std::string syntax = errorOf([] { loadJsonFile(kData / "malformed.json"); });
  EXPECT_NE(syntax.find("malformed.json:byte"), std::string::npos) << syntax;
  EXPECT_THROW(loadJsonFile(kData / "missing.json"), ParseError);

  ModelRegistry reg;
  const json bad = json::parse(R"({"model": "P1", "terms": [{"mult": 1, "twist": {"p0": "1/0"}}]})");
  try {
    bundleFromJson(bad, reg);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "/terms/0/twist/p0");
  }
  const json unknown = json::parse(R"({"model": "P9", "terms": []})");
  EXPECT_THROW(bundleFromJson(unknown, reg), ParseError);
  const json label = json::parse(R"({"model": "P1", "terms": [{"mult": 1, "c1": {"h": "1"}}]})");
  EXPECT_NE(errorOf([&] { bundleFromJson(label, reg); }).find("/terms/0/c1/h"), std::string::npos);
  const json badModel = json::parse(R"({"dimension": 1, "basis": [["1"]]})");
  EXPECT_NE(errorOf([&] { modelFromJson(badModel); }).find("/basis"), std::string::npos);
  const json badPoly = json::parse(R"({"N": 2, "ranks": [1], "d": [], "M0": [[["1"]]], "M1": [[["x"]]]})");
  EXPECT_NE(errorOf([&] { complexFromJson(badPoly); }).find("/M1/0/0/0"), std::string::npos);
}

TEST(Json, UserModelsShadowNothingUnexpectedly) {
  ModelRegistry reg;
  const ModelPtr user = modelFromJson(loadJsonFile(kData / "p1_user.json"));
  reg.add(user);
  EXPECT_EQ(reg.find("Pone"), user);
  EXPECT_EQ(reg.find("P1"), Corpus::instance().model("P1"));
  const ParabolicKClass f = bundleFromJson(loadJsonFile(kData / "bundle_half_point.json"), reg);
  EXPECT_EQ(chPar(f), user->element({{"1", 1}, {"pt", q("1/2")}}));
}

TEST(Json, FamiliesByNameAndInline) {
  ModelRegistry reg;
  const FamilyModel a = familyFromJson(loadJsonFile(kData / "family_line.json"), reg);
  EXPECT_EQ(chi(a, a.total()->one()), a.base()->one());
  const FamilyModel b = familyFromJson(loadJsonFile(kData / "family_inline.json"), reg);
  EXPECT_EQ(chi(b, b.total()->one()), b.base()->one());
  EXPECT_TRUE(chi(b, expClass(-b.total()->basisElement("pt"))).isZero());
}

TEST(Scenarios, AllBuiltInScenariosPass) {
  for (const auto& info : listScenarios()) {
    const Report r = runScenario(info.name);
    EXPECT_TRUE(r.passed()) << r.toText();
    EXPECT_GT(r.checks().size(), 0u) << info.name;
  }
}

TEST(Scenarios, PointedCurvesForEveryR) {
  for (int r = 2; r <= 10; ++r) {
    const Report rep = runScenario("pointed-curves", {{{"r", std::to_string(r)}, {"samples", "5"}}, {}});
    EXPECT_TRUE(rep.passed()) << rep.toText();
    const FamilyModel& fam = Corpus::instance().pointedCurves(r);
    EXPECT_EQ(rep.checks()[0].witness["result"], elementToJson(Rational(2 - r) * fam.base()->one()));
  }
}

TEST(Scenarios, Deterministic) {
  for (const auto& info : listScenarios()) {
    EXPECT_EQ(runScenario(info.name).toJson().dump(), runScenario(info.name).toJson().dump()) << info.name;
    EXPECT_EQ(runScenario(info.name).toText(), runScenario(info.name).toText()) << info.name;
  }
}

TEST(Scenarios, InputErrors) {
  EXPECT_THROW(runScenario("no-such-thing"), InvalidInput);
  EXPECT_THROW(runScenario("pointed-curves", {{{"r", "1"}}, {}}), InvalidInput);
  EXPECT_THROW(runScenario("pointed-curves", {{{"r", "x"}}, {}}), InvalidInput);
  EXPECT_THROW(runScenario("pointed-curves", {{{"bogus", "1"}}, {}}), InvalidInput);
  EXPECT_THROW(runScenario("classical-rr", {{}, kData / "ledger_balanced.json"}), InvalidInput);
  EXPECT_THROW(runScenario("steenbrink", {{{"complex", "nope"}}, {}}), InvalidInput);
  EXPECT_THROW(runScenario("steenbrink", {{}, kData / "malformed.json"}), ParseError);
  EXPECT_THROW(runScenario("steenbrink", {{}, kData / "complex_d_squared.json"}), InvalidInput);
  EXPECT_THROW(runScenario("lefschetz-ledger", {{}, kData / "ledger_bad_rank.json"}), ParseError);
}

TEST(Scenarios, InputFiles) {
  EXPECT_TRUE(runScenario("lefschetz-ledger", {{}, kData / "ledger_balanced.json"}).passed());
  EXPECT_FALSE(runScenario("lefschetz-ledger", {{}, kData / "ledger_unbalanced.json"}).passed());
  EXPECT_TRUE(runScenario("main-theorem", {{}, kData / "degrees_matched.json"}).passed());
  const Report half = runScenario("main-theorem", {{}, kData / "degrees_weight_half.json"});
  EXPECT_FALSE(half.passed());
  EXPECT_EQ(half.checks()[1].witness["sum"], json({{"1", "2/1"}, {"p", "1/2"}}));
  EXPECT_TRUE(runScenario("steenbrink", {{}, kData / "complex_jump.json"}).passed());
  EXPECT_TRUE(runScenario("steenbrink", {{}, kData / "complex_unipotent.json"}).passed());
  EXPECT_FALSE(runScenario("chow-models", {{}, kData / "model_noncommutative.json"}).passed());
}

TEST(Ledger, WorkedExamples) {
  const ModelPtr s = Corpus::instance().model("S");
  const ChowElement one = s->one(), p = s->basisElement("p");
  const std::vector<LedgerEntry> side{{1, "a", 1, one + p}, {-1, "b", 2, 2 * one}};
  EXPECT_TRUE(lefschetzLedger(side, side).equal);
  const std::vector<LedgerEntry> joined{{1, "E", 2, 2 * one + p}};
  const std::vector<LedgerEntry> split{{1, "L1", 1, one + p}, {1, "L2", 1, one}};
  const LedgerBalance b = lefschetzLedger(joined, split);
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.lhs, 2 * one + p);
  const LedgerBalance c = lefschetzLedger(joined, side);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.difference, 3 * one);
  const std::vector<LedgerEntry> foreign{{1, "x", 1, Corpus::instance().model("P1")->one()}};
  EXPECT_THROW(lefschetzLedger(side, foreign), ModelMismatch);
}

TEST(MainTheorem, ProductFamilyAndWeightHalf) {
  const DivisorPtr d = NormalCrossingsDivisor::whole(Corpus::instance().model("S"));
  DegreeLedger product{d, {}};
  const long betti[] = {1, 0, 2, 0, 1};
  for (int i = 0; i < 5; ++i) product.degrees.push_back({i, ParabolicKClass::trivial(d, betti[i])});
  EXPECT_TRUE(mainTheoremInstance(product).passed());

  DegreeLedger lone{d, {{0, ParabolicKClass::trivial(d, 1) + ParabolicKClass::lineBundle(d, {{"j0", q("1/2")}})}}};
  const Report r = mainTheoremInstance(lone);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.checks()[0].passed);
}

TEST(Report, SchemaShape) {
  const json j = runScenario("classical-rr").toJson();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "params", "status", "checks", "summary"}));
  for (const auto& c : j["checks"]) {
    std::vector<std::string> ck;
    for (auto it = c.begin(); it != c.end(); ++it) ck.push_back(it.key());
    EXPECT_EQ(ck, (std::vector<std::string>{"id", "description", "status", "witness"}));
  }
  EXPECT_EQ(j["summary"]["failed"], 0);
}
