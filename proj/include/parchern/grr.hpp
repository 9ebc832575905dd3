#pragma once

// The relative Euler characteristic functional chi_{P/S}(x) = q_*(x * td)
// for curve fibrations q: P -> S, and the log de Rham bookkeeping built on it.

#include <optional>
#include <string>
#include <vector>

#include "parchern/chow.hpp"

namespace parchern {

struct FamilyData {
  std::string name;
  ModelPtr total;
  ModelPtr base;
  std::vector<Matrix> pullbackBlocks;     // q^*: base -> total
  std::vector<Matrix> pushforwardBlocks;  // q_*: total -> base, degree shift -1
  Vector toddRelative;
  Vector logCotangentC1;
  std::vector<std::string> horizontal;  // marked sections K
  std::vector<std::string> vertical;    // fiber components over J
};

/// A validated family of relative dimension one.
class FamilyModel {
public:
  /// Checks shapes, td_0 = 1, c1 of degree one, component names, and the
  /// projection formula q_*(x q^*y) = q_*(x) y on all basis pairs.
  static FamilyModel create(FamilyData data);

  const std::string& name() const { return name_; }
  const ModelPtr& total() const { return pullback_.codomain(); }
  const ModelPtr& base() const { return pullback_.domain(); }
  const LinearMap& pullback() const { return pullback_; }
  const LinearMap& pushforward() const { return pushforward_; }
  const ChowElement& toddRelative() const { return todd_; }
  const ChowElement& logCotangentC1() const { return logCotangent_; }
  const std::vector<std::string>& horizontal() const { return horizontal_; }
  const std::vector<std::string>& vertical() const { return vertical_; }

  /// Same family with a different log cotangent class (no further checks).
  FamilyModel withLogCotangent(ChowElement c1) const;

private:
  FamilyModel(std::string name, LinearMap pullback, LinearMap pushforward, ChowElement todd, ChowElement logCotangent,
              std::vector<std::string> horizontal, std::vector<std::string> vertical);

  std::string name_;
  LinearMap pullback_;
  LinearMap pushforward_;
  ChowElement todd_;
  ChowElement logCotangent_;
  std::vector<std::string> horizontal_;
  std::vector<std::string> vertical_;
};

/// q_*(x * td).
ChowElement chi(const FamilyModel& family, const ChowElement& x);

/// chi(E * (1 - exp(c1 Omega^1_{P/S}(log D)))).
ChowElement logDeRhamEuler(const FamilyModel& family, const ChowElement& e);

/// (exp(c1 Omega) - 1) * [K] == 0 for a horizontal component K.
bool residueIsoCheck(const FamilyModel& family, const std::string& componentId);

struct KRSplit {
  Rational r;       // degree-0 part
  ChowElement k;    // x - r
  bool kSupported;  // k lies in the ideal of the horizontal components
};

KRSplit splitKR(const FamilyModel& family, const ChowElement& x);

struct MainIdentityResult {
  ChowElement result;  // logDeRhamEuler(family, E)
  bool inCH0;
  bool preconditionsHold;
  std::string failure;  // failing component, or the unsupported k, when preconditions fail
  std::optional<Rational> witness;  // the constant r * chi(1 - e^c1), when preconditions hold
};

MainIdentityResult mainIdentity(const FamilyModel& family, const ChowElement& e);

}  // namespace parchern
