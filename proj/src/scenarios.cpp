#include "parchern/scenarios.hpp"

#include <charconv>
#include <functional>

#include "parchern/corpus.hpp"
#include "parchern/sampling.hpp"

namespace parchern {

namespace {

const Rational half = makeRational(1, 2);
const Rational quarter = makeRational(1, 4);

json el(const ChowElement& x) { return elementToJson(x); }

json weightsJson(const WeightMultiset& w) {
  json j = json::object();
  for (const auto& [weight, mult] : w) j[toString(weight)] = mult;
  return j;
}

json ranksJson(const std::vector<long>& ranks) {
  json j = json::array();
  for (long r : ranks) j.push_back(r);
  return j;
}

bool positivePartsVanish(const ChowElement& x) { return x.inDegreeZero(); }

DivisorPtr wholeOf(const std::string& model) { return NormalCrossingsDivisor::whole(Corpus::instance().model(model)); }

ParabolicKClass line(const DivisorPtr& d, const RationalDivisor& twist) { return ParabolicKClass::lineBundle(d, twist); }

// Counts sample outcomes and keeps the first counterexample.
struct Tally {
  long total = 0;
  long failed = 0;
  json firstFailure;

  void record(bool ok, const std::function<json()>& witness) {
    ++total;
    if (ok) return;
    if (failed++ == 0) firstFailure = witness();
  }
  bool report(Report& r, const std::string& description) const {
    json w = {{"samples", total}, {"failed", failed}};
    if (failed > 0) w["first counterexample"] = firstFailure;
    return r.check(description, failed == 0, w);
  }
};

// ---------------------------------------------------------------------------
// parameters

class Params {
public:
  Params(const ScenarioInfo& info, const ScenarioOptions& options) : info_(info) {
    for (const auto& [key, value] : options.params) {
      bool known = false;
      for (const auto& p : info.params) known = known || p.name == key;
      if (!known) throw InvalidInput("scenario \"" + info.name + "\" has no parameter \"" + key + "\"");
    }
    for (const auto& p : info.params) {
      auto it = options.params.find(p.name);
      values_[p.name] = it == options.params.end() ? p.defaultValue : it->second;
    }
    if (options.input && info.input.empty())
      throw InvalidInput("scenario \"" + info.name + "\" does not take --input");
    input_ = options.input;
  }

  const std::string& str(const std::string& name) const { return values_.at(name); }

  long integer(const std::string& name, long lo, long hi) const {
    const std::string& s = str(name);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw InvalidInput("parameter " + name + "=\"" + s + "\" is not an integer");
    if (v < lo || v > hi)
      throw InvalidInput("parameter " + name + "=" + s + " out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return v;
  }

  const std::optional<std::filesystem::path>& input() const { return input_; }

  json toJson() const {
    json j = json::object();
    for (const auto& p : info_.params) j[p.name] = values_.at(p.name);
    if (input_) j["input"] = input_->generic_string();
    return j;
  }

private:
  const ScenarioInfo& info_;
  std::map<std::string, std::string> values_;
  std::optional<std::filesystem::path> input_;
};

// Decodes an input file, prefixing schema errors with the file name.
template <class F>
auto decodeInput(const std::filesystem::path& path, F&& decode) {
  const json j = loadJsonFile(path);
  try {
    return decode(j);
  } catch (const ParseError& e) {
    throw ParseError(path.generic_string() + ":" + e.where(), e.message());
  } catch (const Error& e) {
    throw InvalidInput(path.generic_string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// chow-models

void chowModels(Report& r, const Params& p) {
  const Corpus& corpus = Corpus::instance();
  if (p.input()) {
    const ChowModelData data =
        decodeInput(*p.input(), [&](const json& j) { return modelDataFromJson(j, p.input()->stem().string()); });
    const ValidationReport v = validateModel(data);
    json w = {{"axiom", v.axiom}, {"detail", v.detail}};
    r.check("input model satisfies the ring axioms", v.ok, v.ok ? json{{"model", data.name()}} : w);
    return;
  }
  const ModelPtr p2 = corpus.model("P2");
  const ChowElement h = p2->basisElement("h");
  r.check("P2: h * h = h2", mul(h, h) == p2->basisElement("h2"), {{"h*h", el(mul(h, h))}});
  r.check("P2: h * h2 = 0 (above the top degree)", mul(h, p2->basisElement("h2")).isZero());
  const ChowElement eh = expClass(h);
  r.check("P2: exp(h) = 1 + h + 1/2 h2", eh == p2->element({{"1", 1}, {"h", 1}, {"h2", half}}), {{"exp(h)", el(eh)}});
  r.check("P2: graded part 2 of exp(h) is 1/2 h2", gradedPart(eh, 2) == p2->element({{"h2", half}}));
  r.check("P2: h2 lies in the ideal of L", idealMembership(p2->basisElement("h2"), std::vector<std::string>{"L"}));
  r.check("P2: 1 does not lie in the ideal of L", !idealMembership(p2->one(), std::vector<std::string>{"L"}));

  const ModelPtr bl = corpus.model("BlP2");
  const ChowElement lt = bl->divisorClass("Lt"), e = bl->divisorClass("E");
  r.check("BlP2: Lt^2 = 0, Lt*E = pt, E^2 = -pt",
          mul(lt, lt).isZero() && mul(lt, e) == bl->basisElement("pt") && mul(e, e) == -bl->basisElement("pt"),
          {{"Lt^2", el(mul(lt, lt))}, {"Lt*E", el(mul(lt, e))}, {"E^2", el(mul(e, e))}});
  const LinearMap& b = corpus.blowup().map();
  r.check("blowup pullback is a ring map on h*h", applyMap(b, mul(h, h)) == mul(applyMap(b, h), applyMap(b, h)),
          {{"b^*(h2)", el(applyMap(b, mul(h, h)))}});

  const FamilyModel& fam = corpus.pointedCurves(3);
  const ChowElement sh = fam.total()->basisElement("sh");
  r.check("S x P1 -> S: pushforward of the point class s*h is p", applyMap(fam.pushforward(), sh) == fam.base()->basisElement("p"));

  ChowModelData broken("broken", {{"1"}, {"a", "b"}, {"c"}});
  broken.setProduct("a", "a", {{"c", 1}});
  broken.setProduct("a", "b", {{"c", 1}});
  broken.setProduct("b", "b", {{"c", 1}});
  broken.setProduct("1", "a", {{"a", 2}});
  const ValidationReport v = validateModel(broken);
  r.check("a table whose unit acts as 2 on a is rejected", !v.ok, {{"axiom", v.axiom}, {"detail", v.detail}});

  long models = 0;
  for (const auto& name : corpus.modelNames()) {
    const ModelPtr m = corpus.model(name);
    ChowModelData again(m->name(), m->basis());
    for (std::size_t a = 0; a < m->size(); ++a)
      for (std::size_t c = 0; c < m->size(); ++c) {
        LabelledCoords prod;
        const Vector& v2 = m->product(a, c);
        for (std::size_t k = 0; k < v2.size(); ++k)
          if (v2[k] != 0) prod[m->label(k)] = v2[k];
        again.setProduct(m->label(a), m->label(c), prod);
      }
    models += validateModel(again).ok ? 1 : 0;
  }
  r.check("every corpus model passes validation", models == static_cast<long>(corpus.modelNames().size()),
          {{"models", models}});
}

// ---------------------------------------------------------------------------
// parabolic-calculus

void parabolicCalculus(Report& r, const Params& p) {
  const DivisorPtr p1 = wholeOf("P1");
  const DivisorPtr p2 = wholeOf("P2");
  const DivisorPtr quad = wholeOf("P1xP1");
  const ModelPtr m1 = p1->model(), m2 = p2->model();

  const ParabolicKClass halfP = line(p1, {{"p0", half}});
  r.check("constituent(O(1/2 p0), 0) = O", sameTerms(constituent(halfP, {}), ParabolicKClass::trivial(p1, 1)),
          {{"result", bundleToJson(constituent(halfP, {}))}});
  r.check("constituent(O(1/2 p0), 1/2) = O(p0)",
          sameTerms(constituent(halfP, {{{"p0", half}}}), line(p1, {{"p0", 1}})),
          {{"result", bundleToJson(constituent(halfP, {{{"p0", half}}}))}});
  const ParabolicKClass mixed = line(quad, {{"H0", -quarter}, {"H1", makeRational(3, 4)}});
  const ParabolicKClass mixedC = constituent(mixed, {{{"H0", quarter}, {"H1", quarter}}});
  r.check("constituent(O(-1/4 H0 + 3/4 H1), (1/4, 1/4)) = O(H1)", sameTerms(mixedC, line(quad, {{"H1", 1}})),
          {{"result", bundleToJson(mixedC)}});

  r.check("O(1/2 p0) (x) O(1/2 p0) = O(p0)", sameTerms(tensorPar(halfP, halfP), line(p1, {{"p0", 1}})));
  const ParabolicKClass b = ParabolicKClass::lineBundle(p1, m1->basisElement("pt"), {{"p0", makeRational(2, 3)}});
  const ParabolicKClass bInv = ParabolicKClass::lineBundle(p1, -m1->basisElement("pt"), {{"p0", makeRational(-2, 3)}});
  r.check("L(B) (x) L(B)^-1 = O", sameTerms(tensorPar(b, bInv), ParabolicKClass::trivial(p1, 1)));
  const ParabolicKClass c = line(p1, {{"pinf", quarter}});
  r.check("(L(B) + L'(B')) (x) M(C) = L M(B+C) + L' M(B'+C)",
          sameTerms(tensorPar(halfP + b, c), tensorPar(halfP, c) + tensorPar(b, c)));

  r.check("chPar(O(1/2 p0)) = 1 + 1/2 pt", chPar(halfP) == m1->element({{"1", 1}, {"pt", half}}),
          {{"chPar", el(chPar(halfP))}});
  const ParabolicKClass pm = line(p2, {{"L", half}}) + line(p2, {{"L", -half}});
  r.check("chPar(O(1/2 L) + O(-1/2 L)) = 2 + 1/4 h2 on P2", chPar(pm) == m2->element({{"1", 2}, {"h2", quarter}}),
          {{"chPar", el(chPar(pm))}});
  r.check("chPar(trivial rank 3) = 3", chPar(ParabolicKClass::trivial(p2, 3)) == 3 * m2->one());

  r.check("weights of O(1/2 p0) along p0 = {1/2}", weightsAlong(halfP, "p0") == WeightMultiset{{half, 1}},
          {{"weights", weightsJson(weightsAlong(halfP, "p0"))}});
  r.check("weights of O(p0) along p0 = {0}", weightsAlong(line(p1, {{"p0", 1}}), "p0") == WeightMultiset{{Rational(0), 1}});
  const ParabolicKClass w34 = line(p1, {{"p0", -quarter}}) + line(p1, {{"p0", makeRational(3, 4)}});
  r.check("weights of O(-1/4 p0) + O(3/4 p0) = {3/4, 3/4}",
          weightsAlong(w34, "p0") == WeightMultiset{{makeRational(3, 4), 2}},
          {{"weights", weightsJson(weightsAlong(w34, "p0"))}});

  const DifferenceOverD d1 = diffOverD(halfP, {});
  r.check("diffOverD(O(1/2 p0), 0) = 1/2 pt, supported on D",
          d1.supportedOnD && d1.difference == m1->element({{"pt", half}}), {{"difference", el(d1.difference)}});
  const DifferenceOverD d2 = diffOverD(line(p1, {{"p0", 2}, {"pinf", -1}}), {{{"p0", makeRational(2, 3)}}});
  r.check("diffOverD of an integral bundle is 0", d2.supportedOnD && d2.difference.isZero());
  const DifferenceOverD d3 = diffOverD(line(p2, {{"L", half}}), {});
  r.check("diffOverD(O(1/2 L), 0) = 1/2 h + 1/8 h2, supported on D",
          d3.supportedOnD && d3.difference == m2->element({{"h", half}, {"h2", makeRational(1, 8)}}),
          {{"difference", el(d3.difference)}});

  // Sampled properties.
  Sampler s(static_cast<std::uint64_t>(p.integer("seed", 0, 1L << 40)));
  const long samples = p.integer("samples", 0, 100000);
  const std::vector<std::string> models{"P1", "P2", "P1xP1", "BlP2", "Bl(SxP1)", "SxP1.r3"};
  Tally formula, additive, multiplicative, rank, normalization, semicontinuity, inIdeal, coch;
  for (long i = 0; i < samples; ++i) {
    const DivisorPtr d = wholeOf(models[static_cast<std::size_t>(s.integer(0, models.size() - 1))]);
    const ParabolicLineBundle lb = randomLineBundle(s, d);
    ChowElement exponent = lb.c1;
    for (const auto& [id, coeff] : lb.twist.coefficients()) exponent += coeff * d->classOf(id);
    const ParabolicKClass single = ParabolicKClass::lineBundle(d, lb.c1, lb.twist);
    formula.record(chPar(single) == expClass(exponent), [&] { return json{{"bundle", bundleToJson(single)}}; });

    const ParabolicKClass f = randomBundle(s, d), g = randomBundle(s, d);
    additive.record(chPar(f + g) == chPar(f) + chPar(g), [&] { return json{{"F", bundleToJson(f)}, {"G", bundleToJson(g)}}; });
    multiplicative.record(chPar(tensorPar(f, g)) == mul(chPar(f), chPar(g)),
                          [&] { return json{{"F", bundleToJson(f)}, {"G", bundleToJson(g)}}; });
    rank.record(gradedPart(chPar(f), 0) == Rational(f.rank()) * d->model()->one(),
                [&] { return json{{"F", bundleToJson(f)}}; });

    const MultiIndex beta = randomMultiIndex(s, d);
    const std::string& comp = d->ids()[static_cast<std::size_t>(s.integer(0, d->ids().size() - 1))];
    normalization.record(sameTerms(constituent(f, beta + MultiIndex::unit(comp)),
                                   tensorPar(constituent(f, beta), line(d, {{comp, 1}}))),
                         [&] { return json{{"F", bundleToJson(f)}, {"component", comp}}; });

    // Smallest positive distance from b_i + beta_i up to the next integer.
    Rational gap(1);
    for (const auto& t : f.terms())
      for (const auto& id : d->ids()) {
        const Rational x = t.bundle.twist.at(id) + beta.at(id);
        const Rational up = Rational(floorOf(x) + 1) - x;
        if (up < gap) gap = up;
      }
    MultiIndex eps;
    for (const auto& id : d->ids())
      if (s.coin()) eps.entries[id] = gap * makeRational(s.integer(0, 3), 4);
    semicontinuity.record(sameTerms(constituent(f, beta + eps), constituent(f, beta)),
                          [&] { return json{{"F", bundleToJson(f)}}; });

    inIdeal.record(diffOverD(f, beta).supportedOnD, [&] { return json{{"F", bundleToJson(f)}}; });
  }
  // Classes with chPar in degree 0: differences of twists along components of equal class.
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> twins{
      {"P1", {"p0", "pinf"}}, {"P2", {"L", "M"}}, {"P1xP1", {"F0", "F1"}}, {"P1xP1", {"H0", "H1"}}};
  for (long i = 0; i < samples; ++i) {
    const auto& [model, pair] = twins[static_cast<std::size_t>(s.integer(0, twins.size() - 1))];
    const DivisorPtr d = wholeOf(model);
    const ChowElement c1 = randomDivisorClass(s, d->model());
    const Rational bcoef = s.rational(9, 4);
    ParabolicKClass f(d);
    f.add(1, {c1, {{pair.first, bcoef}}});
    f.add(-1, {c1, {{pair.second, bcoef}}});
    const MultiIndex alpha = randomMultiIndex(s, d);
    const ChowElement shifted = chPar(constituent(f, alpha)) - Rational(f.rank()) * d->model()->one();
    coch.record(chPar(f).inDegreeZero() && idealMembership(shifted, d->ids()),
                [&] { return json{{"F", bundleToJson(f)}}; });
  }
  formula.report(r, "sampled: chPar(L(B)) = exp(c1 + B)");
  additive.report(r, "sampled: chPar is additive");
  multiplicative.report(r, "sampled: chPar is multiplicative");
  rank.report(r, "sampled: degree-0 part of chPar is the rank");
  normalization.report(r, "sampled: F_(beta + delta_i) = F_beta (x) O(D_i)");
  semicontinuity.report(r, "sampled: F_(beta + eps) = F_beta below the next jump");
  inIdeal.report(r, "sampled: chPar(F) - chPar(F_beta) lies in the ideal of D");
  coch.report(r, "sampled: chPar(F) in degree 0 implies chPar(F_alpha) - rank in the ideal of D");
}

// ---------------------------------------------------------------------------
// pullback

void pullbackScenario(Report& r, const Params& p) {
  const Corpus& corpus = Corpus::instance();
  const DivisorPullback& cover = corpus.doubleCover();
  const DivisorPullback& above = corpus.doubleCoverAbove();
  const DivisorPullback& blow = corpus.blowup();

  const ParabolicKClass halfP = line(cover.below(), {{"p0", half}});
  const ParabolicKClass up = pullbackPar(cover, halfP);
  r.check("double cover: f^*O(1/2 p0) = O(p0) upstairs",
          sameTerms(up, line(cover.above(), {{"p0", 1}})) && weightsAlong(up, "p0") == WeightMultiset{{Rational(0), 1}},
          {{"pullback", bundleToJson(up)}});
  const ParabolicKClass sample = halfP + line(cover.below(), {{"pinf", makeRational(-1, 3)}});
  r.check("identity pullback is the identity",
          sameTerms(pullbackPar(DivisorPullback::identity(cover.below()), sample), sample));
  const ParabolicKClass halfL = line(blow.below(), {{"L", half}});
  const ParabolicKClass blown = pullbackPar(blow, halfL);
  r.check("blowup: b^*O(1/2 L) = O(1/2 Lt + 1/2 E)", sameTerms(blown, line(blow.above(), {{"Lt", half}, {"E", half}})),
          {{"pullback", bundleToJson(blown)}});
  r.check("blowup: chPar(b^*O(1/2 L)) = b^*chPar(O(1/2 L))", chPar(blown) == applyMap(blow.map(), chPar(halfL)),
          {{"chPar", el(chPar(blown))}});

  Sampler s(static_cast<std::uint64_t>(p.integer("seed", 0, 1L << 40)));
  const long samples = p.integer("samples", 0, 100000);
  Tally coverT, blowT, functor;
  const DivisorPullback twice = compose(above, cover);
  for (long i = 0; i < samples; ++i) {
    const ParabolicKClass f = randomBundle(s, cover.below());
    coverT.record(chPar(pullbackPar(cover, f)) == applyMap(cover.map(), chPar(f)),
                  [&] { return json{{"F", bundleToJson(f)}}; });
    functor.record(sameTerms(pullbackPar(twice, f), pullbackPar(above, pullbackPar(cover, f))),
                   [&] { return json{{"F", bundleToJson(f)}}; });
    const ParabolicKClass g = randomBundle(s, blow.below());
    blowT.record(chPar(pullbackPar(blow, g)) == applyMap(blow.map(), chPar(g)),
                 [&] { return json{{"F", bundleToJson(g)}}; });
  }
  coverT.report(r, "sampled: chPar commutes with pullback along the double cover");
  blowT.report(r, "sampled: chPar commutes with pullback along the blowup");
  functor.report(r, "sampled: pullback along the composite of two covers is the composite of pullbacks");
}

// ---------------------------------------------------------------------------
// log-connection

void logConnection(Report& r, const Params& p) {
  const NormalizedEigenvalue n0 = normalizeEigenvalue(0), nh = normalizeEigenvalue(-half),
                             n32 = normalizeEigenvalue(makeRational(3, 2));
  r.check("normalize 0 -> (0, 0), -1/2 -> (-1/2, 0), 3/2 -> (-1/2, 2)",
          n0.value == 0 && n0.shift == 0 && nh.value == -half && nh.shift == 0 && n32.value == -half && n32.shift == 2,
          {{"3/2", toString(n32.value) + " + " + n32.shift.get_str()}});

  const ResidueSpectrum spectrum({{"D", {{-half, 1}, {Rational(0), 1}, {makeRational(3, 4), 1}}}});
  const WeightMultiset w = associatedWeights(spectrum, "D");
  r.check("weights of eigenvalues -1/2, 0, 3/4 are 1/2, 0, 1/4",
          w == WeightMultiset{{Rational(0), 1}, {quarter, 1}, {half, 1}}, {{"weights", weightsJson(w)}});
  r.check("window representatives: (-1/2, 3/4) -> -1/2, (0, 0) -> 0, (-3/4, 1/2) -> 1/4",
          representativeInWindow(-half, makeRational(3, 4)) == -half && representativeInWindow(0, 0) == 0 &&
              representativeInWindow(makeRational(-3, 4), half) == quarter,
          {{"(-3/4, 1/2)", toString(representativeInWindow(makeRational(-3, 4), half))}});
  r.check("positive integer eigenvalues are flagged",
          positiveIntegerEigenvalueCheck(ResidueSpectrum({{"D", {{-half, 1}, {Rational(0), 2}}}})) &&
              !positiveIntegerEigenvalueCheck(ResidueSpectrum({{"D", {{Rational(2), 1}}}})));

  const DivisorPtr p1 = wholeOf("P1");
  const ModelPtr m1 = p1->model();
  const AbelianLogConnection trivial({{m1->zero(), {}}, {m1->zero(), {}}, {m1->zero(), {}}});
  r.check("trivial connection of rank 3 -> trivial rank 3 bundle",
          sameTerms(associatedParabolic(trivial, p1), ParabolicKClass::trivial(p1, 3)));
  const AbelianLogConnection lefschetz({{m1->zero(), {{"p0", 0}}}, {m1->zero(), {{"p0", -half}}}});
  const ParabolicKClass lp = associatedParabolic(lefschetz, p1);
  r.check("eigenvalues 0, -1/2 at p0 -> O + O(1/2 p0)",
          sameTerms(lp, ParabolicKClass::trivial(p1, 1) + line(p1, {{"p0", half}})), {{"bundle", bundleToJson(lp)}});
  const AbelianLogConnection shifted({{m1->zero(), {{"p0", makeRational(3, 2)}}}});
  const ParabolicKClass sp = associatedParabolic(shifted, p1);
  r.check("eigenvalue 3/2 at p0 -> O(1/2 p0)", sameTerms(sp, line(p1, {{"p0", half}})), {{"bundle", bundleToJson(sp)}});

  Sampler s(static_cast<std::uint64_t>(p.integer("seed", 0, 1L << 40)));
  const long samples = p.integer("samples", 0, 100000);
  Tally window, congruence, translation, positive, sum, permutation, restriction;
  const DivisorPtr quad = wholeOf("P1xP1");
  const DivisorPullback& restrict = Corpus::instance().fiberRestriction();
  for (long i = 0; i < samples; ++i) {
    const Rational lambda = s.rational(13, 6);
    const Rational alpha = s.rational(6, 6);
    const Rational rep = representativeInWindow(lambda, alpha);
    window.record(-alpha <= rep && rep < 1 - alpha, [&] {
      return json{{"lambda", toString(lambda)}, {"alpha", toString(alpha)}, {"representative", toString(rep)}};
    });
    congruence.record(isInteger(rep - lambda), [&] { return json{{"lambda", toString(lambda)}, {"alpha", toString(alpha)}}; });
    if (alpha > 0 && alpha <= 1)
      positive.record(!(isInteger(rep) && rep > 0), [&] { return json{{"lambda", toString(lambda)}, {"alpha", toString(alpha)}}; });

    const long shift = s.integer(-3, 3);
    translation.record(associatedWeights(ResidueSpectrum({{"D", {{lambda, 1}}}}), "D") ==
                           associatedWeights(ResidueSpectrum({{"D", {{lambda + shift, 1}}}}), "D"),
                       [&] { return json{{"lambda", toString(lambda)}, {"shift", shift}}; });

    const AbelianLogConnection e = randomConnection(s, quad), f = randomConnection(s, quad);
    sum.record(sameTerms(associatedParabolic(e + f, quad), associatedParabolic(e, quad) + associatedParabolic(f, quad)),
               [&] { return json{{"E", bundleToJson(associatedParabolic(e, quad))}}; });
    std::vector<RankOnePiece> reversed(e.pieces().rbegin(), e.pieces().rend());
    permutation.record(sameTerms(associatedParabolic(AbelianLogConnection(reversed), quad), associatedParabolic(e, quad)),
                       [&] { return json{{"E", bundleToJson(associatedParabolic(e, quad))}}; });
    restriction.record(sameTerms(pullbackPar(restrict, associatedParabolic(e, quad)),
                                 associatedParabolic(pullbackConnection(restrict, e), restrict.above())),
                       [&] { return json{{"E", bundleToJson(associatedParabolic(e, quad))}}; });
  }
  window.report(r, "sampled: representative lies in [-alpha, 1 - alpha)");
  congruence.report(r, "sampled: representative is congruent to lambda mod 1");
  positive.report(r, "sampled: for alpha in (0, 1] the representative is never a positive integer");
  translation.report(r, "sampled: weights are invariant under integer translation of eigenvalues");
  sum.report(r, "sampled: associated bundle of a direct sum is the direct sum");
  permutation.report(r, "sampled: permuting pieces permutes terms");
  restriction.report(r, "sampled: restriction to a transversal fiber commutes with the construction");
}

// ---------------------------------------------------------------------------
// families

void classicalRR(Report& r, const Params&) {
  const FamilyModel& fam = Corpus::instance().projectiveLineOverPoint();
  const ModelPtr pt = fam.base();
  const ChowElement h = fam.total()->basisElement("pt");
  const ChowElement c0 = chi(fam, fam.total()->one());
  const ChowElement cm1 = chi(fam, expClass(-h));
  r.check("chi(P1, O) = 1", c0 == pt->one(), {{"chi", el(c0)}});
  r.check("chi(P1, O(-1)) = 0", cm1.isZero(), {{"chi", el(cm1)}});
  r.check("chi(0) = 0", chi(fam, fam.total()->zero()).isZero());
  const ChowElement c1 = chi(fam, expClass(h));
  r.check("chi(P1, O(1)) = 2", c1 == 2 * pt->one(), {{"chi", el(c1)}});
  const ChowElement omega = chi(fam, expClass(fam.logCotangentC1()));
  r.check("chi(P1, Omega^1) = -1", omega == -pt->one(), {{"chi", el(omega)}});
}

void pointedCurves(Report& r, const Params& p) {
  const int sections = static_cast<int>(p.integer("r", 2, 10));
  const FamilyModel& fam = Corpus::instance().pointedCurves(sections);
  const ChowElement one = fam.total()->one();
  const ChowElement euler = logDeRhamEuler(fam, one);
  r.check("logDeRhamEuler(1) = 2 - r", euler == Rational(2 - sections) * fam.base()->one(), {{"result", el(euler)}});
  r.check("logDeRhamEuler(1) has no positive-degree part", positivePartsVanish(euler));
  for (const auto& k : fam.horizontal()) r.check("residue isomorphism along " + k, residueIsoCheck(fam, k));
  const MainIdentityResult mi = mainIdentity(fam, one);
  json w = {{"result", el(mi.result)}};
  if (mi.witness) w["witness"] = toString(*mi.witness);
  r.check("mainIdentity(1): preconditions hold and the result lies in CH^0", mi.preconditionsHold && mi.inCH0, w);

  const ModelPtr t = fam.total();
  const KRSplit a = splitKR(fam, t->element({{"1", 2}, {"h", half}}));
  r.check("splitKR(2 + 1/2 h): r = 2, k supported on the sections", a.r == 2 && a.kSupported, {{"k", el(a.k)}});
  const KRSplit b = splitKR(fam, t->element({{"1", 2}, {"s", 1}}));
  r.check("splitKR(2 + s): k not supported on the sections", !b.kSupported, {{"k", el(b.k)}});
  const KRSplit c = splitKR(fam, 3 * one);
  r.check("splitKR(3): k = 0", c.k.isZero() && c.kSupported);

  Sampler s(static_cast<std::uint64_t>(p.integer("seed", 0, 1L << 40)));
  const long samples = p.integer("samples", 0, 100000);
  Tally firstPiece, projection, linear;
  const ChowElement factor = one - expClass(fam.logCotangentC1());
  for (long i = 0; i < samples; ++i) {
    ChowElement k = t->zero();
    for (const auto& id : fam.horizontal())
      if (s.coin()) k += mul(t->divisorClass(id), randomElement(s, t));
    firstPiece.record(chi(fam, mul(k, factor)).isZero(), [&] { return json{{"k", el(k)}}; });
    const ChowElement x = randomElement(s, t), y = randomElement(s, fam.base());
    projection.record(chi(fam, mul(x, applyMap(fam.pullback(), y))) == mul(chi(fam, x), y),
                      [&] { return json{{"x", el(x)}, {"y", el(y)}}; });
    const ChowElement z = randomElement(s, t);
    const Rational q1 = s.rational(), q2 = s.rational();
    linear.record(chi(fam, q1 * x + q2 * z) == q1 * chi(fam, x) + q2 * chi(fam, z), [&] { return json{{"x", el(x)}}; });
  }
  firstPiece.report(r, "sampled: chi(k (1 - exp(c1 Omega))) = 0 for k supported on the sections");
  projection.report(r, "sampled: projection formula chi(x q^*y) = chi(x) y");
  linear.report(r, "sampled: chi is Q-linear");
}

void corruptedFamily(Report& r, const Params&) {
  const FamilyModel& fam = Corpus::instance().corruptedFamily();
  const ChowElement h = fam.total()->basisElement("h");
  const ChowElement obstruction = mul(expClass(fam.logCotangentC1()) - fam.total()->one(), h);
  r.check("residue isomorphism check fails along k1", !residueIsoCheck(fam, "k1"), {{"(e^s - 1) h", el(obstruction)}});
  const MainIdentityResult mi = mainIdentity(fam, fam.total()->one());
  r.check("mainIdentity reports the violated precondition and asserts nothing", !mi.preconditionsHold && !mi.witness,
          {{"failure", mi.failure}, {"result", el(mi.result)}});
}

void weightHalf(Report& r, const Params& p) {
  const int sections = static_cast<int>(p.integer("r", 2, 10));
  const FamilyModel& fam = Corpus::instance().pointedCurves(sections);
  const ModelPtr t = fam.total();
  const DivisorPtr d = NormalCrossingsDivisor::whole(t);
  const AbelianLogConnection conn({{t->zero(), {{"k1", 0}}}, {t->zero(), {{"k1", -half}}}});
  const ParabolicKClass f = associatedParabolic(conn, d);
  r.check("eigenvalues 0, -1/2 along k1 give O + O(1/2 k1)",
          sameTerms(f, ParabolicKClass::trivial(d, 1) + line(d, {{"k1", half}})), {{"bundle", bundleToJson(f)}});
  r.check("weights along k1 are {0, 1/2}", weightsAlong(f, "k1") == WeightMultiset{{Rational(0), 1}, {half, 1}});
  const ChowElement e = chPar(f);
  r.check("chPar(O + O(1/2 k1)) = 2 + 1/2 h", e == t->element({{"1", 2}, {"h", half}}), {{"chPar", el(e)}});
  const MainIdentityResult mi = mainIdentity(fam, e);
  json w = {{"result", el(mi.result)}};
  if (mi.witness) w["witness"] = toString(*mi.witness);
  r.check("mainIdentity: result = 2 (2 - r), in CH^0",
          mi.preconditionsHold && mi.inCH0 && mi.result == Rational(2 * (2 - sections)) * fam.base()->one(), w);
  const ChowElement matched = e - 2 * t->one();
  const MainIdentityResult mm = mainIdentity(fam, matched);
  r.check("ledger minus its matching trivial ledger: result = 0", mm.preconditionsHold && mm.result.isZero(),
          {{"result", el(mm.result)}});
}

void blowupFamily(Report& r, const Params&) {
  const FamilyModel& fam = Corpus::instance().blowupFamily();
  const ModelPtr t = fam.total();
  const ChowElement k1 = t->divisorClass("k1"), k2 = t->divisorClass("k2"), e = t->basisElement("e"),
                    s = t->basisElement("s"), pt = t->basisElement("pt");
  r.check("intersection numbers: k1 k2 = 0, k1^2 = -pt, k2^2 = pt, k1 e = pt, k2 s = pt",
          mul(k1, k2).isZero() && mul(k1, k1) == -pt && mul(k2, k2) == pt && mul(k1, e) == pt && mul(k2, s) == pt,
          {{"k1^2", el(mul(k1, k1))}, {"k2^2", el(mul(k2, k2))}});
  const ChowElement c = fam.logCotangentC1();
  r.check("c1(Omega(log)) meets both sections trivially", mul(c, k1).isZero() && mul(c, k2).isZero(),
          {{"c1", el(c)}});
  for (const auto& k : fam.horizontal()) r.check("residue isomorphism along " + k, residueIsoCheck(fam, k));
  const ChowElement chi1 = chi(fam, t->one());
  r.check("chi(O) = 1", chi1 == fam.base()->one(), {{"chi", el(chi1)}});
  const ChowElement chiK = chi(fam, expClass(k1));
  r.check("chi(O(k1)) = 2 - p", chiK == fam.base()->element({{"1", 2}, {"p", -1}}), {{"chi", el(chiK)}});
  const ChowElement euler = logDeRhamEuler(fam, t->one());
  r.check("logDeRhamEuler(1) = 0", euler.isZero(), {{"result", el(euler)}});

  // Ledger: E^0 = 4 O(1/2 k1) + 4 O(-k1)(1/2 k1), E^1 = O(e) + O(-e) + 6 O.
  const DivisorPtr d = NormalCrossingsDivisor::whole(t);
  ParabolicKClass e0(d), e1(d);
  e0.add(4, {t->zero(), {{"k1", half}}});
  e0.add(4, {-k1, {{"k1", half}}});
  e1.add(1, {e, {}});
  e1.add(1, {-e, {}});
  e1.add(6, {t->zero(), {}});
  const ChowElement total = chPar(e0) - chPar(e1);
  r.check("ledger: chPar(E^0) - chPar(E^1) = 0", total.isZero(), {{"sum", el(total)}});
  const ChowElement x = chPar(constituent(e0, {})) - chPar(constituent(e1, {}));
  r.check("alpha = 0 constituents: x = -4 k1 - pt", x == -4 * k1 - pt, {{"x", el(x)}});
  r.check("x - rank lies in the ideal of D", idealMembership(x, d->ids()));
  const KRSplit split = splitKR(fam, x);
  r.check("x = k + r with r = 0 and k supported on the sections", split.r == 0 && split.kSupported, {{"k", el(split.k)}});
  const MainIdentityResult mi = mainIdentity(fam, x);
  json w = {{"result", el(mi.result)}};
  if (mi.witness) w["witness"] = toString(*mi.witness);
  r.check("mainIdentity(x) = 0, in CH^0", mi.preconditionsHold && mi.inCH0 && mi.result.isZero(), w);
}

// ---------------------------------------------------------------------------
// steenbrink

void complexChecks(Report& r, const std::string& label, const LogComplex& c) {
  const SteenbrinkVerdict v = verdict(c);
  json w = {{"status", toString(v.status)},
            {"origin ranks", ranksJson(v.originRanks)},
            {"generic ranks", ranksJson(v.genericRanks)}};
  json polys = json::array();
  for (const auto& cp : v.hypotheses.residueCharPolys) polys.push_back(charPolyString(cp));
  w["residue char polys"] = polys;
  if (!v.message.empty()) w["message"] = v.message;
  r.check(label + ": no theorem violation", v.status != VerdictStatus::TheoremViolation, w);
  const long eo = eulerCharacteristic(v.originRanks), eg = eulerCharacteristic(v.genericRanks);
  r.check(label + ": Euler characteristic is constant", eo == eg, {{"origin", eo}, {"generic", eg}});
  if (v.status == VerdictStatus::Pass)
    r.check(label + ": hypotheses hold and fiber ranks agree", v.originRanks == v.genericRanks);
}

void steenbrinkScenario(Report& r, const Params& p) {
  if (p.input()) {
    complexChecks(r, p.input()->filename().string(), decodeInput(*p.input(), complexFromJson));
    return;
  }
  const Corpus& corpus = Corpus::instance();
  const std::string which = p.str("complex");
  if (which == "all") {
    for (const auto& name : corpus.complexNames()) complexChecks(r, name, corpus.complex(name));
  } else {
    complexChecks(r, which, corpus.complex(which));
  }
  Sampler s(static_cast<std::uint64_t>(p.integer("seed", 0, 1L << 40)));
  const long samples = p.integer("samples", 0, 100000);
  Tally passing, failing;
  for (long i = 0; i < samples; ++i) {
    const LogComplex good = randomLogComplex(s);
    const SteenbrinkVerdict gv = verdict(good);
    passing.record(gv.status == VerdictStatus::Pass && gv.originRanks == gv.genericRanks,
                   [&] { return json{{"complex", complexToJson(good)}, {"status", toString(gv.status)}}; });
    ComplexRecipe recipe;
    recipe.rankJumps = s.coin();
    recipe.nilpotentResidue = !s.coin();
    recipe.identityScalars = !s.coin();
    const LogComplex other = randomLogComplex(s, recipe);
    const SteenbrinkVerdict ov = verdict(other);
    failing.record(ov.status != VerdictStatus::TheoremViolation &&
                       eulerCharacteristic(ov.originRanks) == eulerCharacteristic(ov.genericRanks),
                   [&] { return json{{"complex", complexToJson(other)}, {"status", toString(ov.status)}}; });
  }
  passing.report(r, "sampled: hypothesis-passing complexes have constant fiber ranks");
  failing.report(r, "sampled: arbitrary complexes give no theorem violation and constant Euler characteristic");
}

void steenbrinkTrap(Report& r, const Params&) {
  const LogComplex& c = Corpus::instance().complex("t-multiplication");
  const SteenbrinkVerdict v = verdict(c);
  r.check("origin ranks (1, 1) differ from generic ranks (0, 0)",
          v.originRanks == std::vector<long>{1, 1} && v.genericRanks == std::vector<long>{0, 0},
          {{"origin ranks", ranksJson(v.originRanks)}, {"generic ranks", ranksJson(v.genericRanks)}});
  json polys = json::array();
  for (const auto& cp : v.hypotheses.residueCharPolys) polys.push_back(charPolyString(cp));
  r.check("residue on the special fiber is not nilpotent", !v.hypotheses.residueNilpotent, {{"char polys", polys}});
  r.check("rejected at the hypothesis stage", v.status == VerdictStatus::HypothesisFailure,
          {{"status", toString(v.status)}, {"message", v.message}});
  r.check("Euler characteristic is constant", eulerCharacteristic(v.originRanks) == eulerCharacteristic(v.genericRanks));
}

// ---------------------------------------------------------------------------
// ledgers

LedgerEntry entry(int sign, std::string label, const ChowElement& cls) {
  const long rank = cls[0].get_num().get_si();
  return {sign, std::move(label), rank, cls};
}

void ledgerChecks(Report& r, const std::string& label, const std::vector<LedgerEntry>& lhs,
                  const std::vector<LedgerEntry>& rhs) {
  const LedgerBalance b = lefschetzLedger(lhs, rhs);
  r.check(label, b.equal, {{"lhs", el(b.lhs)}, {"rhs", el(b.rhs)}, {"difference", el(b.difference)}});
}

void lefschetzLedgerScenario(Report& r, const Params& p) {
  if (p.input()) {
    ModelRegistry models;
    const auto [lhs, rhs] = decodeInput(*p.input(), [&](const json& j) { return ledgerFromJson(j, models); });
    ledgerChecks(r, "input ledger balances", lhs, rhs);
    return;
  }
  const ModelPtr base = Corpus::instance().model("S");
  const ChowElement one = base->one(), pnt = base->basisElement("p");
  // Product family S x (P1 x P1): Betti numbers 1, 0, 2, 0, 1 against P1 x P1 = P1 * P1.
  std::vector<LedgerEntry> lhs, rhs;
  const long betti[] = {1, 0, 2, 0, 1};
  for (int m = 0; m < 5; ++m)
    if (betti[m] != 0) lhs.push_back(entry(m % 2 ? -1 : 1, "H^" + std::to_string(m), Rational(betti[m]) * one));
  const long line[] = {1, 0, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (line[i] * line[j] != 0)
        rhs.push_back(entry((i + j) % 2 ? -1 : 1, "H^" + std::to_string(i) + "(E^" + std::to_string(j) + ")",
                            Rational(line[i] * line[j]) * one));
  ledgerChecks(r, "product family: sum (-1)^m b_m = sum (-1)^(i+j) b_i b_j", lhs, rhs);
  ledgerChecks(r, "identical sides balance", lhs, lhs);
  const std::vector<LedgerEntry> joined{entry(1, "O(j0) + O(-j0)", 2 * one)};
  const std::vector<LedgerEntry> split{entry(1, "O(j0)", one + pnt), entry(1, "O(-j0)", one - pnt)};
  ledgerChecks(r, "splitting a rank-2 entry into two rank-1 entries", joined, split);
  const std::vector<LedgerEntry> off{entry(1, "O(j0)", one + pnt)};
  const LedgerBalance bad = lefschetzLedger(joined, off);
  r.check("an unbalanced ledger is detected", !bad.equal, {{"difference", el(bad.difference)}});
}

void mainTheoremScenario(Report& r, const Params& p) {
  if (p.input()) {
    ModelRegistry models;
    mainTheoremChecks(r, decodeInput(*p.input(), [&](const json& j) { return degreeLedgerFromJson(j, models); }),
                      "input ledger");
    return;
  }
  const DivisorPtr d = wholeOf("S");
  DegreeLedger product{d, {}};
  const long betti[] = {1, 0, 2, 0, 1};
  for (int i = 0; i < 5; ++i) product.degrees.push_back({i, ParabolicKClass::trivial(d, betti[i])});
  mainTheoremChecks(r, product, "product family S x (P1 x P1)");

  DegreeLedger matched{d, {}};
  const ParabolicKClass f = ParabolicKClass::trivial(d, 1) + line(d, {{"j0", half}});
  matched.degrees.push_back({1, f});
  matched.degrees.push_back({2, f});
  mainTheoremChecks(r, matched, "weight-1/2 ledger O + O(1/2 j0) against its match");
}

const std::vector<ScenarioInfo>& registry() {
  static const std::vector<ScenarioInfo> list = [] {
    const ScenarioParam seed{"seed", "1", "sampler seed"};
    auto samples = [](const char* n) { return ScenarioParam{"samples", n, "number of sampled inputs"}; };
    return std::vector<ScenarioInfo>{
        {"chow-models", "ring axioms and basic operations on the corpus models", {}, "model JSON"},
        {"parabolic-calculus", "constituents, tensor products, weights and chPar", {seed, samples("25")}, ""},
        {"pullback", "pullbacks along the double cover and the blowup", {seed, samples("25")}, ""},
        {"log-connection", "residues, weights and the associated parabolic bundle", {seed, samples("25")}, ""},
        {"classical-rr", "chi on P1 over a point", {}, ""},
        {"pointed-curves", "S x P1 with r disjoint sections",
         {{"r", "3", "number of sections, 2..10"}, seed, samples("25")}, ""},
        {"corrupted-family", "a family whose log cotangent class is wrong", {}, ""},
        {"weight-half", "O + O(1/2 k1) on S x P1", {{"r", "3", "number of sections, 2..10"}}, ""},
        {"blowup-family", "two sections separated by one blowup", {}, ""},
        {"steenbrink", "fiber ranks of complexes with a logarithmic action",
         {{"complex", "all", "corpus complex name or all"}, seed, samples("10")}, "complex JSON"},
        {"steenbrink-trap", "the t-multiplication complex", {}, ""},
        {"lefschetz-ledger", "alternating-sum ledgers", {}, "ledger JSON"},
        {"main-theorem", "sum (-1)^i chPar(E^i) in degree 0", {}, "degree ledger JSON"},
    };
  }();
  return list;
}

}  // namespace

std::vector<ScenarioInfo> listScenarios() { return registry(); }

Report runScenario(const std::string& name, const ScenarioOptions& options) {
  static const std::map<std::string, std::function<void(Report&, const Params&)>> bodies{
      {"chow-models", chowModels},
      {"parabolic-calculus", parabolicCalculus},
      {"pullback", pullbackScenario},
      {"log-connection", logConnection},
      {"classical-rr", classicalRR},
      {"pointed-curves", pointedCurves},
      {"corrupted-family", corruptedFamily},
      {"weight-half", weightHalf},
      {"blowup-family", blowupFamily},
      {"steenbrink", steenbrinkScenario},
      {"steenbrink-trap", steenbrinkTrap},
      {"lefschetz-ledger", lefschetzLedgerScenario},
      {"main-theorem", mainTheoremScenario},
  };
  const ScenarioInfo* info = nullptr;
  for (const auto& s : registry())
    if (s.name == name) info = &s;
  if (!info) throw InvalidInput("unknown scenario \"" + name + "\"");
  const Params params(*info, options);
  if (name == "steenbrink" && !options.input) {
    const std::string which = params.str("complex");
    const auto names = Corpus::instance().complexNames();
    if (which != "all" && std::find(names.begin(), names.end(), which) == names.end())
      throw InvalidInput("unknown complex \"" + which + "\"");
  }
  Report report(name, params.toJson());
  bodies.at(name)(report, params);
  return report;
}

LedgerBalance lefschetzLedger(const std::vector<LedgerEntry>& lhs, const std::vector<LedgerEntry>& rhs) {
  const LedgerEntry* first = !lhs.empty() ? &lhs.front() : !rhs.empty() ? &rhs.front() : nullptr;
  if (!first) throw InvalidInput("ledger has no entries");
  const ModelPtr model = first->cls.model();
  auto total = [&](const std::vector<LedgerEntry>& side) {
    ChowElement sum = model->zero();
    for (const auto& e : side) {
      if (e.cls.model() != model) throw ModelMismatch("ledger entry \"" + e.label + "\" lives on another model");
      sum += Rational(e.sign) * e.cls;
    }
    return sum;
  };
  ChowElement l = total(lhs), r = total(rhs);
  ChowElement diff = l - r;
  const bool equal = diff.isZero();
  return {std::move(l), std::move(r), std::move(diff), equal};
}

void mainTheoremChecks(Report& report, const DegreeLedger& ledger, const std::string& label) {
  ChowElement sum = ledger.divisor->model()->zero();
  long euler = 0;
  for (const auto& [degree, f] : ledger.degrees) {
    const int sign = degree % 2 == 0 ? 1 : -1;
    sum += Rational(sign) * chPar(f);
    euler += sign * f.rank();
  }
  report.check(label + ": degree-0 part is the alternating sum of ranks",
               gradedPart(sum, 0) == Rational(euler) * ledger.divisor->model()->one(), {{"ranks", euler}});
  report.check(label + ": sum (-1)^i chPar(E^i) lies in CH^0", sum.inDegreeZero(), {{"sum", el(sum)}});
}

Report mainTheoremInstance(const DegreeLedger& ledger) {
  Report report("main-theorem", json::object());
  mainTheoremChecks(report, ledger, "ledger");
  return report;
}

}  // namespace parchern
