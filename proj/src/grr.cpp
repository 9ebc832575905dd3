#include "parchern/grr.hpp"

#include <algorithm>

namespace parchern {

FamilyModel::FamilyModel(std::string name, LinearMap pullback, LinearMap pushforward, ChowElement todd,
                         ChowElement logCotangent, std::vector<std::string> horizontal, std::vector<std::string> vertical)
    : name_(std::move(name)),
      pullback_(std::move(pullback)),
      pushforward_(std::move(pushforward)),
      todd_(std::move(todd)),
      logCotangent_(std::move(logCotangent)),
      horizontal_(std::move(horizontal)),
      vertical_(std::move(vertical)) {}

FamilyModel FamilyModel::create(FamilyData data) {
  const std::string& n = data.name;
  if (!data.total || !data.base) throw InvalidInput("family " + n + ": missing models");
  if (data.total->dimension() != data.base->dimension() + 1)
    throw InvalidInput("family " + n + ": total space must have dimension dim(base) + 1");
  LinearMap pullback = LinearMap::pullback(data.base, data.total, std::move(data.pullbackBlocks));
  LinearMap pushforward = LinearMap::pushforward(data.total, data.base, 1, std::move(data.pushforwardBlocks));
  ChowElement todd(data.total, std::move(data.toddRelative));
  ChowElement logCotangent(data.total, std::move(data.logCotangentC1));
  if (todd[0] != 1) throw InvalidInput("family " + n + ": relative Todd class must have degree-0 part 1");
  if (!logCotangent.isHomogeneous(1)) throw InvalidInput("family " + n + ": log cotangent class must have degree 1");
  for (const auto* list : {&data.horizontal, &data.vertical})
    for (const auto& id : *list)
      if (!data.total->hasDivisor(id)) throw InvalidInput("family " + n + ": unknown divisor component \"" + id + "\"");
  for (const auto& id : data.horizontal)
    if (std::find(data.vertical.begin(), data.vertical.end(), id) != data.vertical.end())
      throw InvalidInput("family " + n + ": component \"" + id + "\" is both horizontal and vertical");

  const ChowModel& P = *data.total;
  const ChowModel& S = *data.base;
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = 0; b < S.size(); ++b) {
      const ChowElement x = P.basisElement(P.label(a));
      const ChowElement y = S.basisElement(S.label(b));
      if (!(pushforward(mul(x, pullback(y))) == mul(pushforward(x), y)))
        throw InvalidInput("family " + n + ": projection formula fails on (" + P.label(a) + "," + S.label(b) + ")");
    }
  return FamilyModel(std::move(data.name), std::move(pullback), std::move(pushforward), std::move(todd),
                     std::move(logCotangent), std::move(data.horizontal), std::move(data.vertical));
}

FamilyModel FamilyModel::withLogCotangent(ChowElement c1) const {
  if (c1.model() != total()) throw ModelMismatch("log cotangent class from another model");
  FamilyModel copy = *this;
  copy.logCotangent_ = std::move(c1);
  return copy;
}

ChowElement chi(const FamilyModel& family, const ChowElement& x) {
  if (x.model() != family.total())
    throw ModelMismatch("chi of family " + family.name() + " applied to an element of " + x.model()->name());
  return family.pushforward()(mul(x, family.toddRelative()));
}

namespace {

// sum_j (-1)^j ch Omega^j = 1 - exp(c1 Omega^1(log D)).
ChowElement alternatingLogForms(const FamilyModel& family) {
  return family.total()->one() - expClass(family.logCotangentC1());
}

}  // namespace

ChowElement logDeRhamEuler(const FamilyModel& family, const ChowElement& e) {
  if (e.model() != family.total()) throw ModelMismatch("log de Rham Euler class of an element of " + e.model()->name());
  return chi(family, mul(e, alternatingLogForms(family)));
}

bool residueIsoCheck(const FamilyModel& family, const std::string& componentId) {
  const auto& h = family.horizontal();
  if (std::find(h.begin(), h.end(), componentId) == h.end())
    throw DomainError("\"" + componentId + "\" is not a horizontal component of family " + family.name());
  const ChowElement restricted = mul(expClass(family.logCotangentC1()) - family.total()->one(),
                                     family.total()->divisorClass(componentId));
  return restricted.isZero();
}

KRSplit splitKR(const FamilyModel& family, const ChowElement& x) {
  if (x.model() != family.total()) throw ModelMismatch("splitKR of an element of " + x.model()->name());
  const Rational r = x[0];
  ChowElement k = x - r * family.total()->one();
  const bool supported = idealMembership(k, family.horizontal());
  return {r, std::move(k), supported};
}

MainIdentityResult mainIdentity(const FamilyModel& family, const ChowElement& e) {
  MainIdentityResult out{logDeRhamEuler(family, e), false, true, {}, std::nullopt};
  out.inCH0 = out.result.inDegreeZero();
  for (const auto& id : family.horizontal())
    if (!residueIsoCheck(family, id)) {
      out.preconditionsHold = false;
      out.failure = "residue isomorphism fails along " + id;
      return out;
    }
  const KRSplit split = splitKR(family, e);
  if (!split.kSupported) {
    out.preconditionsHold = false;
    out.failure = "k = " + split.k.str() + " is not supported on the horizontal components";
    return out;
  }
  const ChowElement second = logDeRhamEuler(family, family.total()->one());
  out.witness = split.r * second[0];
  return out;
}

}  // namespace parchern
