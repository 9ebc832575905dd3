#include "parchern/corpus.hpp"

namespace parchern {

namespace {

struct ProductEntry {
  std::string a, b;
  LabelledCoords result;
};

ModelPtr makeModel(const std::string& name, std::vector<std::vector<std::string>> basis,
                   const std::vector<ProductEntry>& products,
                   const std::vector<std::pair<std::string, LabelledCoords>>& divisors) {
  ChowModelData data(name, std::move(basis));
  for (const auto& p : products) data.setProduct(p.a, p.b, p.result);
  for (const auto& [id, cls] : divisors) data.addDivisor(id, cls);
  return ChowModel::create(data);
}

const Rational one(1);
const Rational half(1, 2);

ModelPtr projectiveLine(const std::string& name, const std::string& first, const std::string& second) {
  return makeModel(name, {{"1"}, {"pt"}}, {}, {{first, {{"pt", one}}}, {second, {{"pt", one}}}});
}

DivisorPtr wholeDivisor(const ModelPtr& m) { return NormalCrossingsDivisor::whole(m); }

FamilyModel productFamily(const ModelPtr& total, const ModelPtr& base, int sections, const ChowElement& logCotangent) {
  FamilyData data;
  data.name = total->name();
  data.total = total;
  data.base = base;
  data.pullbackBlocks = LinearMap::blocksFromImages(*base, *total, 0, {{"1", {{"1", one}}}, {"p", {{"s", one}}}});
  data.pushforwardBlocks = LinearMap::blocksFromImages(*total, *base, 1, {{"h", {{"1", one}}}, {"sh", {{"p", one}}}});
  data.toddRelative = total->element({{"1", one}, {"h", one}}).coords();
  data.logCotangentC1 = logCotangent.coords();
  for (int i = 1; i <= sections; ++i) data.horizontal.push_back("k" + std::to_string(i));
  data.vertical = {"f0"};
  return FamilyModel::create(std::move(data));
}

PolyMatrix polyMatrix(std::size_t rows, std::size_t cols, const std::vector<Poly>& entries) {
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
  return m;
}

}  // namespace

const Corpus& Corpus::instance() {
  static const Corpus corpus;
  return corpus;
}

Corpus::Corpus() {
  auto add = [this](ModelPtr m) { models_.emplace(m->name(), m); };

  add(makeModel("point", {{"1"}}, {}, {}));
  add(projectiveLine("P1", "p0", "pinf"));
  add(projectiveLine("P1.cover", "p0", "pinf"));
  add(projectiveLine("P1.cover2", "p0", "pinf"));
  add(projectiveLine("P1.fiber", "H0", "H1"));
  add(makeModel("S", {{"1"}, {"p"}}, {}, {{"j0", {{"p", one}}}, {"j1", {{"p", one}}}}));
  add(makeModel("P2", {{"1"}, {"h"}, {"h2"}}, {{"h", "h", {{"h2", one}}}}, {{"L", {{"h", one}}}, {"M", {{"h", one}}}}));
  add(makeModel("BlP2", {{"1"}, {"H", "E"}, {"pt"}},
                {{"H", "H", {{"pt", one}}}, {"E", "E", {{"pt", Rational(-1)}}}},
                {{"Lt", {{"H", one}, {"E", Rational(-1)}}}, {"E", {{"E", one}}}, {"M", {{"H", one}}}}));
  add(makeModel("P1xP1", {{"1"}, {"s", "h"}, {"sh"}}, {{"s", "h", {{"sh", one}}}},
                {{"F0", {{"s", one}}}, {"F1", {{"s", one}}}, {"H0", {{"h", one}}}, {"H1", {{"h", one}}}}));
  for (int r = 2; r <= 10; ++r) {
    std::vector<std::pair<std::string, LabelledCoords>> divisors;
    for (int i = 1; i <= r; ++i) divisors.push_back({"k" + std::to_string(i), {{"h", one}}});
    divisors.push_back({"f0", {{"s", one}}});
    add(makeModel("SxP1.r" + std::to_string(r), {{"1"}, {"s", "h"}, {"sh"}}, {{"s", "h", {{"sh", one}}}}, divisors));
  }
  add(makeModel("Bl(SxP1)", {{"1"}, {"s", "h", "e"}, {"pt"}},
                {{"s", "h", {{"pt", one}}}, {"e", "e", {{"pt", Rational(-1)}}}},
                {{"k1", {{"h", one}, {"e", Rational(-1)}}},
                 {"k2", {{"h", one}, {"s", one}, {"e", Rational(-1)}}},
                 {"Ft", {{"s", one}, {"e", Rational(-1)}}},
                 {"E", {{"e", one}}},
                 {"f1", {{"s", one}}}}));

  // Morphisms.
  {
    const auto cover = [&](const std::string& below, const std::string& above) {
      const ModelPtr lo = model(below), hi = model(above);
      LinearMap f = LinearMap::pullback(
          lo, hi, LinearMap::blocksFromImages(*lo, *hi, 0, {{"1", {{"1", one}}}, {"pt", {{"pt", Rational(2)}}}}));
      return std::make_unique<DivisorPullback>(std::move(f), wholeDivisor(lo), wholeDivisor(hi),
                                               std::map<std::string, RationalDivisor>{
                                                   {"p0", RationalDivisor{{"p0", Rational(2)}}},
                                                   {"pinf", RationalDivisor{{"pinf", Rational(2)}}}});
    };
    doubleCover_ = cover("P1", "P1.cover");
    doubleCoverAbove_ = cover("P1.cover", "P1.cover2");
  }
  {
    const ModelPtr lo = model("P2"), hi = model("BlP2");
    LinearMap f = LinearMap::pullback(
        lo, hi, LinearMap::blocksFromImages(*lo, *hi, 0, {{"1", {{"1", one}}}, {"h", {{"H", one}}}, {"h2", {{"pt", one}}}}));
    blowup_ = std::make_unique<DivisorPullback>(
        std::move(f), wholeDivisor(lo), wholeDivisor(hi),
        std::map<std::string, RationalDivisor>{{"L", RationalDivisor{{"Lt", one}, {"E", one}}},
                                               {"M", RationalDivisor{{"M", one}}}});
  }
  {
    const ModelPtr lo = model("P1xP1"), hi = model("P1.fiber");
    LinearMap f =
        LinearMap::pullback(lo, hi, LinearMap::blocksFromImages(*lo, *hi, 0, {{"1", {{"1", one}}}, {"h", {{"pt", one}}}}));
    fiberRestriction_ = std::make_unique<DivisorPullback>(
        std::move(f), wholeDivisor(lo), wholeDivisor(hi),
        std::map<std::string, RationalDivisor>{{"H0", RationalDivisor{{"H0", one}}},
                                               {"H1", RationalDivisor{{"H1", one}}}});
  }

  // Families.
  const ModelPtr base = model("S");
  for (int r = 2; r <= 10; ++r) {
    const ModelPtr total = model("SxP1.r" + std::to_string(r));
    pointedCurves_.emplace(r, productFamily(total, base, r, total->element({{"h", Rational(r - 2)}})));
  }
  {
    const ModelPtr total = model("SxP1.r3");
    corrupted_ = std::make_unique<FamilyModel>(productFamily(total, base, 3, total->basisElement("s")));
  }
  {
    const ModelPtr total = model("Bl(SxP1)");
    FamilyData data;
    data.name = total->name();
    data.total = total;
    data.base = base;
    data.pullbackBlocks = LinearMap::blocksFromImages(*base, *total, 0, {{"1", {{"1", one}}}, {"p", {{"s", one}}}});
    data.pushforwardBlocks = LinearMap::blocksFromImages(*total, *base, 1, {{"h", {{"1", one}}}, {"pt", {{"p", one}}}});
    data.toddRelative = total->element({{"1", one}, {"h", one}, {"e", -half}}).coords();
    data.logCotangentC1 = total->element({{"s", one}, {"e", Rational(-1)}}).coords();
    data.horizontal = {"k1", "k2"};
    data.vertical = {"Ft", "E", "f1"};
    blowupFamily_ = std::make_unique<FamilyModel>(FamilyModel::create(std::move(data)));
  }
  {
    const ModelPtr total = model("P1"), pt = model("point");
    FamilyData data;
    data.name = "P1/point";
    data.total = total;
    data.base = pt;
    data.pullbackBlocks = LinearMap::blocksFromImages(*pt, *total, 0, {{"1", {{"1", one}}}});
    data.pushforwardBlocks = LinearMap::blocksFromImages(*total, *pt, 1, {{"pt", {{"1", one}}}});
    data.toddRelative = total->element({{"1", one}, {"pt", one}}).coords();
    data.logCotangentC1 = total->element({{"pt", Rational(-2)}}).coords();
    lineOverPoint_ = std::make_unique<FamilyModel>(FamilyModel::create(std::move(data)));
  }

  // Complexes over Q[t]/(t^N).
  const Poly t = Poly::t();
  const Poly o(one), z;
  {
    LogComplexData c;
    c.order = 2;
    c.ranks = {1, 2, 1};
    c.d = {PolyMatrix(2, 1), PolyMatrix(1, 2)};
    for (auto r : c.ranks) {
      c.m0.push_back(PolyMatrix::identity(r));
      c.m1.push_back(PolyMatrix(r, r));
    }
    complexes_.emplace("trivial", LogComplex::create(std::move(c)));
  }
  {
    LogComplexData c;
    c.order = 3;
    c.ranks = {1, 1};
    c.d = {polyMatrix(1, 1, {t})};
    c.m0 = {PolyMatrix::identity(1), PolyMatrix::identity(1)};
    c.m1 = {polyMatrix(1, 1, {z}), polyMatrix(1, 1, {Poly(Rational(-1))})};
    complexes_.emplace("t-multiplication", LogComplex::create(std::move(c)));
  }
  {
    LogComplexData c;
    c.order = 2;
    c.ranks = {2, 2};
    c.d = {PolyMatrix::identity(2)};
    c.m0 = {PolyMatrix::identity(2), PolyMatrix::identity(2)};
    c.m1 = {PolyMatrix(2, 2), PolyMatrix(2, 2)};
    complexes_.emplace("acyclic", LogComplex::create(std::move(c)));
  }
}

ModelPtr Corpus::model(const std::string& name) const {
  auto it = models_.find(name);
  if (it == models_.end()) throw DomainError("no built-in model \"" + name + "\"");
  return it->second;
}

std::vector<std::string> Corpus::modelNames() const {
  std::vector<std::string> names;
  for (const auto& [name, m] : models_) names.push_back(name);
  return names;
}

const FamilyModel& Corpus::pointedCurves(int sections) const {
  auto it = pointedCurves_.find(sections);
  if (it == pointedCurves_.end())
    throw DomainError("pointed-curve families exist for 2..10 sections, not " + std::to_string(sections));
  return it->second;
}

const LogComplex& Corpus::complex(const std::string& name) const {
  auto it = complexes_.find(name);
  if (it == complexes_.end()) throw DomainError("no built-in complex \"" + name + "\"");
  return it->second;
}

std::vector<std::string> Corpus::complexNames() const {
  std::vector<std::string> names;
  for (const auto& [name, c] : complexes_) names.push_back(name);
  return names;
}

}  // namespace parchern
