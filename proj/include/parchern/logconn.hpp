#pragma once

// Residues of logarithmic connections with rational eigenvalues and the
// locally abelian parabolic bundle they determine.

#include <map>
#include <string>
#include <vector>

#include "parchern/parabolic.hpp"

namespace parchern {

struct NormalizedEigenvalue {
  Rational value;  // in (-1, 0]
  Integer shift;   // original = value + shift
};

NormalizedEigenvalue normalizeEigenvalue(const Rational& lambda);

/// Per component, eigenvalue -> multiplicity.
class ResidueSpectrum {
public:
  ResidueSpectrum() = default;
  explicit ResidueSpectrum(std::map<std::string, std::map<Rational, long>> perComponent);

  const std::map<std::string, std::map<Rational, long>>& perComponent() const { return perComponent_; }
  bool hasComponent(const std::string& id) const { return perComponent_.count(id) != 0; }
  /// Total multiplicity at a component.
  long multiplicity(const std::string& id) const;

private:
  std::map<std::string, std::map<Rational, long>> perComponent_;
};

/// Weight w in [0,1) with w = -lambda mod 1, for each eigenvalue at the component.
WeightMultiset associatedWeights(const ResidueSpectrum& spectrum, const std::string& componentId);

/// Unique lambda' = lambda mod 1 with -alpha <= lambda' < 1 - alpha.
Rational representativeInWindow(const Rational& lambda, const Rational& alpha);

/// True iff no eigenvalue is a strictly positive integer.
bool positiveIntegerEigenvalueCheck(const ResidueSpectrum& spectrum);

struct RankOnePiece {
  ChowElement c1;
  std::map<std::string, Rational> eigenvalues;  // unlisted components: 0

  Rational eigenvalueAt(const std::string& id) const;
};

/// A logarithmic connection split into rank-one pieces.
class AbelianLogConnection {
public:
  explicit AbelianLogConnection(std::vector<RankOnePiece> pieces);

  long rank() const { return static_cast<long>(pieces_.size()); }
  const std::vector<RankOnePiece>& pieces() const { return pieces_; }
  const ModelPtr& model() const { return pieces_.front().c1.model(); }

  /// Spectrum over the given components (each piece counts once per component).
  ResidueSpectrum spectrum(const std::vector<std::string>& componentIds) const;

  friend AbelianLogConnection operator+(const AbelianLogConnection& a, const AbelianLogConnection& b);

private:
  std::vector<RankOnePiece> pieces_;
};

/// One term L(sum_i w_i D_i) per rank-one piece, weights in [0,1).
ParabolicKClass associatedParabolic(const AbelianLogConnection& connection, const DivisorPtr& divisor);

/// Pulls eigenvalue data back along f: the eigenvalue upstairs at E_j is
/// sum_i m_ij lambda_i where f^*(D_i) = sum_j m_ij E_j.
AbelianLogConnection pullbackConnection(const DivisorPullback& f, const AbelianLogConnection& connection);

}  // namespace parchern
