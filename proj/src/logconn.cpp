#include "parchern/logconn.hpp"

namespace parchern {

NormalizedEigenvalue normalizeEigenvalue(const Rational& lambda) {
  // lambda - shift in (-1, 0]  <=>  shift = ceil(lambda) = -floor(-lambda).
  const Integer shift = -floorOf(-lambda);
  Rational value = lambda - Rational(shift);
  value.canonicalize();
  return {value, shift};
}

ResidueSpectrum::ResidueSpectrum(std::map<std::string, std::map<Rational, long>> perComponent)
    : perComponent_(std::move(perComponent)) {
  for (const auto& [id, eigen] : perComponent_)
    for (const auto& [lambda, m] : eigen)
      if (m <= 0) throw InvalidInput("eigenvalue multiplicities must be positive (component \"" + id + "\")");
}

long ResidueSpectrum::multiplicity(const std::string& id) const {
  auto it = perComponent_.find(id);
  if (it == perComponent_.end()) return 0;
  long n = 0;
  for (const auto& [lambda, m] : it->second) n += m;
  return n;
}

WeightMultiset associatedWeights(const ResidueSpectrum& spectrum, const std::string& componentId) {
  auto it = spectrum.perComponent().find(componentId);
  if (it == spectrum.perComponent().end()) throw DomainError("spectrum has no component \"" + componentId + "\"");
  WeightMultiset weights;
  for (const auto& [lambda, m] : it->second) weights[fractionalPart(-lambda)] += m;
  return weights;
}

Rational representativeInWindow(const Rational& lambda, const Rational& alpha) {
  // lambda' = lambda + n with n the unique integer giving lambda + alpha + n in [0, 1).
  Rational r = lambda - Rational(floorOf(lambda + alpha));
  r.canonicalize();
  return r;
}

bool positiveIntegerEigenvalueCheck(const ResidueSpectrum& spectrum) {
  for (const auto& [id, eigen] : spectrum.perComponent())
    for (const auto& [lambda, m] : eigen)
      if (isInteger(lambda) && sgn(lambda) > 0) return false;
  return true;
}

Rational RankOnePiece::eigenvalueAt(const std::string& id) const {
  auto it = eigenvalues.find(id);
  return it == eigenvalues.end() ? Rational(0) : it->second;
}

AbelianLogConnection::AbelianLogConnection(std::vector<RankOnePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidInput("a connection needs at least one rank-one piece");
  for (const auto& p : pieces_) {
    if (p.c1.model() != pieces_.front().c1.model()) throw ModelMismatch("connection pieces on different models");
    if (!p.c1.isHomogeneous(1)) throw InvalidInput("c1 of a rank-one piece must be a degree-1 class");
  }
}

ResidueSpectrum AbelianLogConnection::spectrum(const std::vector<std::string>& componentIds) const {
  std::map<std::string, std::map<Rational, long>> per;
  for (const auto& id : componentIds)
    for (const auto& p : pieces_) per[id][p.eigenvalueAt(id)] += 1;
  return ResidueSpectrum(std::move(per));
}

AbelianLogConnection operator+(const AbelianLogConnection& a, const AbelianLogConnection& b) {
  if (a.model() != b.model()) throw ModelMismatch("direct sum of connections on different models");
  std::vector<RankOnePiece> pieces = a.pieces_;
  pieces.insert(pieces.end(), b.pieces_.begin(), b.pieces_.end());
  return AbelianLogConnection(std::move(pieces));
}

ParabolicKClass associatedParabolic(const AbelianLogConnection& connection, const DivisorPtr& divisor) {
  if (connection.model() != divisor->model()) throw ModelMismatch("connection and divisor on different models");
  for (const auto& p : connection.pieces())
    for (const auto& [id, lambda] : p.eigenvalues)
      if (!divisor->contains(id)) throw DomainError("eigenvalue along \"" + id + "\", which is not a divisor component");
  ParabolicKClass out(divisor);
  for (const auto& p : connection.pieces()) {
    RationalDivisor twist;
    for (const auto& id : divisor->ids()) twist.set(id, fractionalPart(-p.eigenvalueAt(id)));
    out.add(1, {p.c1, twist});
  }
  return out;
}

AbelianLogConnection pullbackConnection(const DivisorPullback& f, const AbelianLogConnection& connection) {
  std::vector<RankOnePiece> pieces;
  for (const auto& p : connection.pieces()) {
    RationalDivisor residues;
    for (const auto& [id, lambda] : p.eigenvalues) residues.set(id, lambda);
    RankOnePiece up{f.map()(p.c1), {}};
    const RationalDivisor pulled = f.pullDivisor(residues);
    for (const auto& [id, lambda] : pulled.coefficients()) up.eigenvalues[id] = lambda;
    pieces.push_back(std::move(up));
  }
  return AbelianLogConnection(std::move(pieces));
}

}  // namespace parchern
