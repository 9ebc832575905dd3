#pragma once

// Built-in geometries. Every object is constructed once and shared, so
// elements obtained from different lookups of the same model are compatible.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parchern/grr.hpp"
#include "parchern/parabolic.hpp"
#include "parchern/steenbrink.hpp"

namespace parchern {

class Corpus {
public:
  static const Corpus& instance();

  ModelPtr model(const std::string& name) const;
  bool hasModel(const std::string& name) const { return models_.count(name) != 0; }
  std::vector<std::string> modelNames() const;

  /// z -> z^2 on P^1, branched over p0 and pinf: "P1.cover" -> "P1".
  const DivisorPullback& doubleCover() const { return *doubleCover_; }
  /// "P1.cover2" -> "P1.cover", the same cover one level up.
  const DivisorPullback& doubleCoverAbove() const { return *doubleCoverAbove_; }
  /// Blowup of P^2 at a point on the line L: "BlP2" -> "P2".
  const DivisorPullback& blowup() const { return *blowup_; }
  /// Inclusion of the fiber {pt} x P^1 into P^1 x P^1, keeping H0 and H1.
  const DivisorPullback& fiberRestriction() const { return *fiberRestriction_; }

  /// S x P^1 -> S with r disjoint constant sections k1..kr, 2 <= r <= 10.
  const FamilyModel& pointedCurves(int sections) const;
  /// Bl_p(P^1 x P^1) -> P^1, two sections colliding at p, separated by the blowup.
  const FamilyModel& blowupFamily() const { return *blowupFamily_; }
  /// The r = 3 product family with c1(Omega) replaced by the base class s.
  const FamilyModel& corruptedFamily() const { return *corrupted_; }
  /// The trivial family P^1 -> point with td = 1 + h.
  const FamilyModel& projectiveLineOverPoint() const { return *lineOverPoint_; }

  /// "trivial", "t-multiplication", "acyclic".
  const LogComplex& complex(const std::string& name) const;
  std::vector<std::string> complexNames() const;

private:
  Corpus();

  std::map<std::string, ModelPtr> models_;
  std::unique_ptr<DivisorPullback> doubleCover_, doubleCoverAbove_, blowup_, fiberRestriction_;
  std::map<int, FamilyModel> pointedCurves_;
  std::unique_ptr<FamilyModel> blowupFamily_, corrupted_, lineOverPoint_;
  std::map<std::string, LogComplex> complexes_;
};

}  // namespace parchern
