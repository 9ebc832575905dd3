#pragma once

// Deterministic random inputs for the property suites and the sampled
// scenario checks. Uses only raw engine output, so a seed reproduces the
// same sample on every standard library.

#include <cstdint>
#include <random>

#include "parchern/logconn.hpp"
#include "parchern/parabolic.hpp"
#include "parchern/steenbrink.hpp"

namespace parchern {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  /// p/q with |p| <= maxNumerator, 1 <= q <= maxDenominator.
  Rational rational(long maxNumerator = 7, long maxDenominator = 4);

private:
  std::mt19937_64 engine_;
};

/// Integer combination of degree-1 basis elements.
ChowElement randomDivisorClass(Sampler& s, const ModelPtr& model, long bound = 2);
/// Element with random rational coordinates in degrees >= minDegree.
ChowElement randomElement(Sampler& s, const ModelPtr& model, int minDegree = 0);

ParabolicLineBundle randomLineBundle(Sampler& s, const DivisorPtr& divisor);
/// 1..maxTerms terms with multiplicities in [-2, 3] \ {0}.
ParabolicKClass randomBundle(Sampler& s, const DivisorPtr& divisor, int maxTerms = 3);
MultiIndex randomMultiIndex(Sampler& s, const DivisorPtr& divisor);

/// Rank-one pieces with random eigenvalues along every divisor component.
AbelianLogConnection randomConnection(Sampler& s, const DivisorPtr& divisor, int maxRank = 4);

struct ComplexRecipe {
  bool nilpotentResidue = true;  // residue on the special-fiber cohomology is nilpotent
  bool identityScalars = true;   // M0 induces the identity there
  bool rankJumps = false;        // include summands O --t^k--> O
};

/// A valid complex over Q[t]/(t^N) with ranks <= 4 and N <= 6: a direct sum of
/// a zero-differential part, contractible pairs and (optionally) t^k pairs,
/// twisted by chain homotopies and a polynomial change of frame.
LogComplex randomLogComplex(Sampler& s, const ComplexRecipe& recipe = {});

}  // namespace parchern
