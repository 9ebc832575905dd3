#include "parchern/parabolic.hpp"

#include <algorithm>

namespace parchern {

// ---------------------------------------------------------------------------
// NormalCrossingsDivisor

NormalCrossingsDivisor::NormalCrossingsDivisor(ModelPtr model, const std::vector<std::string>& componentIds)
    : model_(std::move(model)) {
  for (const auto& id : componentIds) {
    if (contains(id)) throw InvalidInput("duplicate divisor component \"" + id + "\"");
    if (!model_->hasDivisor(id))
      throw InvalidInput("model " + model_->name() + " has no divisor component \"" + id + "\"");
    ids_.push_back(id);
    classes_.push_back(model_->divisorClass(id));
  }
}

DivisorPtr NormalCrossingsDivisor::whole(const ModelPtr& model) {
  return std::make_shared<const NormalCrossingsDivisor>(model, model->divisorNames());
}

bool NormalCrossingsDivisor::contains(const std::string& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

const ChowElement& NormalCrossingsDivisor::classOf(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return classes_[i];
  throw DomainError("no divisor component \"" + id + "\"");
}

bool operator==(const NormalCrossingsDivisor& a, const NormalCrossingsDivisor& b) {
  return a.model_ == b.model_ && a.ids_ == b.ids_;
}

namespace {

void requireSameDivisor(const DivisorPtr& a, const DivisorPtr& b) {
  if (a != b && !(*a == *b)) throw ModelMismatch("parabolic classes over different divisors");
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalDivisor / MultiIndex

RationalDivisor::RationalDivisor(std::initializer_list<std::pair<const std::string, Rational>> init) {
  for (const auto& [id, v] : init) set(id, v);
}

Rational RationalDivisor::at(const std::string& id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RationalDivisor::set(const std::string& id, const Rational& value) {
  if (sgn(value) == 0) coeffs_.erase(id);
  else coeffs_[id] = value;
}

bool RationalDivisor::isIntegral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return isInteger(kv.second); });
}

RationalDivisor& RationalDivisor::operator+=(const RationalDivisor& other) {
  for (const auto& [id, v] : other.coeffs_) set(id, at(id) + v);
  return *this;
}

RationalDivisor operator*(const Rational& s, const RationalDivisor& d) {
  RationalDivisor out;
  for (const auto& [id, v] : d.coeffs_) out.set(id, s * v);
  return out;
}

Rational MultiIndex::at(const std::string& id) const {
  auto it = entries.find(id);
  return it == entries.end() ? Rational(0) : it->second;
}

MultiIndex MultiIndex::unit(const std::string& id) { return MultiIndex{{{id, Rational(1)}}}; }

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  for (const auto& [id, v] : b.entries) out.entries[id] = out.at(id) + v;
  return out;
}

// ---------------------------------------------------------------------------
// ParabolicKClass

ParabolicKClass::ParabolicKClass(DivisorPtr divisor) : divisor_(std::move(divisor)) {
  if (!divisor_) throw DomainError("parabolic class without a divisor");
}

ParabolicKClass::ParabolicKClass(DivisorPtr divisor, std::vector<Term> terms) : ParabolicKClass(std::move(divisor)) {
  for (auto& t : terms) add(t.mult, std::move(t.bundle));
}

ParabolicKClass ParabolicKClass::trivial(DivisorPtr divisor, long rank) {
  ParabolicKClass f(divisor);
  f.add(rank, {divisor->model()->zero(), {}});
  return f;
}

ParabolicKClass ParabolicKClass::lineBundle(DivisorPtr divisor, const RationalDivisor& twist) {
  auto c1 = divisor->model()->zero();
  return lineBundle(std::move(divisor), std::move(c1), twist);
}

ParabolicKClass ParabolicKClass::lineBundle(DivisorPtr divisor, ChowElement c1, const RationalDivisor& twist) {
  ParabolicKClass f(std::move(divisor));
  f.add(1, {std::move(c1), twist});
  return f;
}

void ParabolicKClass::check(const ParabolicLineBundle& b) const {
  if (b.c1.model() != model()) throw ModelMismatch("line bundle c1 from model " + b.c1.model()->name());
  if (!b.c1.isHomogeneous(1)) throw DomainError("c1 of a line bundle must be a degree-1 class");
  for (const auto& [id, v] : b.twist.coefficients())
    if (!divisor_->contains(id)) throw DomainError("twist along \"" + id + "\", which is not a divisor component");
}

void ParabolicKClass::add(long mult, ParabolicLineBundle bundle) {
  check(bundle);
  terms_.push_back({mult, std::move(bundle)});
}

long ParabolicKClass::rank() const {
  long r = 0;
  for (const auto& t : terms_) r += t.mult;
  return r;
}

ParabolicKClass operator+(const ParabolicKClass& a, const ParabolicKClass& b) {
  requireSameDivisor(a.divisor(), b.divisor());
  ParabolicKClass out = a;
  for (const auto& t : b.terms()) out.add(t.mult, t.bundle);
  return out;
}

namespace {

std::string bundleKey(const ParabolicLineBundle& b) {
  std::string key;
  for (const auto& c : b.c1.coords()) key += toString(c) + ",";
  key += "|";
  for (const auto& [id, v] : b.twist.coefficients()) key += id + "=" + toString(v) + ",";
  return key;
}

std::map<std::string, long> collect(const ParabolicKClass& f) {
  std::map<std::string, long> counts;
  for (const auto& t : f.terms()) counts[bundleKey(t.bundle)] += t.mult;
  std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
  return counts;
}

}  // namespace

bool sameTerms(const ParabolicKClass& a, const ParabolicKClass& b) {
  if (a.model() != b.model()) return false;
  return collect(a) == collect(b);
}

// ---------------------------------------------------------------------------
// operations

ParabolicKClass constituent(const ParabolicKClass& f, const MultiIndex& beta) {
  ParabolicKClass out(f.divisor());
  for (const auto& t : f.terms()) {
    RationalDivisor integral;
    for (const auto& id : f.divisor()->ids())
      integral.set(id, Rational(floorOf(t.bundle.twist.at(id) + beta.at(id))));
    out.add(t.mult, {t.bundle.c1, integral});
  }
  return out;
}

ParabolicKClass tensorPar(const ParabolicKClass& f, const ParabolicKClass& g) {
  requireSameDivisor(f.divisor(), g.divisor());
  ParabolicKClass out(f.divisor());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      out.add(a.mult * b.mult, {a.bundle.c1 + b.bundle.c1, a.bundle.twist + b.bundle.twist});
  return out;
}

ChowElement chPar(const ParabolicKClass& f) {
  ChowElement sum = f.model()->zero();
  for (const auto& t : f.terms()) {
    ChowElement exponent = t.bundle.c1;
    for (const auto& [id, b] : t.bundle.twist.coefficients()) exponent += b * f.divisor()->classOf(id);
    sum += Rational(t.mult) * expClass(exponent);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// DivisorPullback

DivisorPullback::DivisorPullback(LinearMap map, DivisorPtr below, DivisorPtr above,
                                 std::map<std::string, RationalDivisor> images)
    : map_(std::move(map)), below_(std::move(below)), above_(std::move(above)), images_(std::move(images)) {
  if (map_.kind() != MapKind::Pullback) throw InvalidInput("divisor pullback needs a pullback-kind map");
  if (below_->model() != map_.domain() || above_->model() != map_.codomain())
    throw ModelMismatch("divisor pullback: divisors do not live on the map's models");
  for (const auto& [id, img] : images_) {
    if (!below_->contains(id)) throw InvalidInput("divisor pullback: unknown component \"" + id + "\"");
    if (!img.isIntegral()) throw InvalidInput("divisor pullback: f*(" + id + ") is not an integral combination");
  }
  for (const auto& id : below_->ids()) {
    ChowElement upstairs = above_->model()->zero();
    const RationalDivisor img = image(id);
    for (const auto& [up, m] : img.coefficients()) {
      if (!above_->contains(up)) throw InvalidInput("divisor pullback: unknown component \"" + up + "\" upstairs");
      upstairs += m * above_->classOf(up);
    }
    if (!(upstairs == map_(below_->classOf(id))))
      throw InvalidInput("divisor pullback: f*(" + id + ") = " + upstairs.str() + " disagrees with the ring map value " +
                         map_(below_->classOf(id)).str());
  }
}

DivisorPullback DivisorPullback::identity(DivisorPtr divisor) {
  std::map<std::string, RationalDivisor> images;
  for (const auto& id : divisor->ids()) images[id] = RationalDivisor{{id, Rational(1)}};
  return DivisorPullback(LinearMap::identity(divisor->model()), divisor, divisor, std::move(images));
}

RationalDivisor DivisorPullback::image(const std::string& id) const {
  auto it = images_.find(id);
  return it == images_.end() ? RationalDivisor{} : it->second;
}

RationalDivisor DivisorPullback::pullDivisor(const RationalDivisor& b) const {
  RationalDivisor out;
  for (const auto& [id, coeff] : b.coefficients()) out += coeff * image(id);
  return out;
}

DivisorPullback compose(const DivisorPullback& second, const DivisorPullback& first) {
  if (first.above() != second.below() && !(*first.above() == *second.below()))
    throw ModelMismatch("divisor pullbacks are not composable");
  std::map<std::string, RationalDivisor> images;
  for (const auto& id : first.below()->ids()) images[id] = second.pullDivisor(first.image(id));
  return DivisorPullback(compose(second.map(), first.map()), first.below(), second.above(), std::move(images));
}

ParabolicKClass pullbackPar(const DivisorPullback& f, const ParabolicKClass& bundle) {
  requireSameDivisor(bundle.divisor(), f.below());
  ParabolicKClass out(f.above());
  for (const auto& t : bundle.terms()) out.add(t.mult, {f.map()(t.bundle.c1), f.pullDivisor(t.bundle.twist)});
  return out;
}

WeightMultiset weightsAlong(const ParabolicKClass& f, const std::string& componentId) {
  if (!f.divisor()->contains(componentId)) throw DomainError("no divisor component \"" + componentId + "\"");
  WeightMultiset weights;
  for (const auto& t : f.terms()) weights[fractionalPart(t.bundle.twist.at(componentId))] += t.mult;
  std::erase_if(weights, [](const auto& kv) { return kv.second == 0; });
  return weights;
}

DifferenceOverD diffOverD(const ParabolicKClass& f, const MultiIndex& alpha) {
  ChowElement diff = chPar(f) - chPar(constituent(f, alpha));
  const bool member = idealMembership(diff, f.divisor()->ids());
  return {std::move(diff), member};
}

}  // namespace parchern
