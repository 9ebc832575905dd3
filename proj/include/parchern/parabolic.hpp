#pragma once

// Locally abelian parabolic bundles in normal form: formal Z-combinations of
// parabolic line bundles L(B) with B a rational divisor supported on a
// normal crossings divisor.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parchern/chow.hpp"

namespace parchern {

/// The components D_1..D_k of a normal crossings divisor, with their classes.
class NormalCrossingsDivisor {
public:
  /// Components taken from the model's divisor registry, in the given order.
  NormalCrossingsDivisor(ModelPtr model, const std::vector<std::string>& componentIds);
  /// All registry components of the model.
  static std::shared_ptr<const NormalCrossingsDivisor> whole(const ModelPtr& model);

  const ModelPtr& model() const { return model_; }
  const std::vector<std::string>& ids() const { return ids_; }
  bool contains(const std::string& id) const;
  const ChowElement& classOf(const std::string& id) const;

  friend bool operator==(const NormalCrossingsDivisor& a, const NormalCrossingsDivisor& b);

private:
  ModelPtr model_;
  std::vector<std::string> ids_;
  std::vector<ChowElement> classes_;
};

using DivisorPtr = std::shared_ptr<const NormalCrossingsDivisor>;

/// B = sum b_i D_i. Zero coefficients are never stored.
class RationalDivisor {
public:
  RationalDivisor() = default;
  RationalDivisor(std::initializer_list<std::pair<const std::string, Rational>> init);

  Rational at(const std::string& id) const;
  void set(const std::string& id, const Rational& value);
  const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
  bool isIntegral() const;

  RationalDivisor& operator+=(const RationalDivisor& other);
  friend RationalDivisor operator+(RationalDivisor a, const RationalDivisor& b) { return a += b; }
  friend RationalDivisor operator*(const Rational& s, const RationalDivisor& d);
  friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;

private:
  std::map<std::string, Rational> coeffs_;
};

/// alpha = (alpha_1, ..., alpha_k); unnamed components are 0.
struct MultiIndex {
  std::map<std::string, Rational> entries;

  Rational at(const std::string& id) const;
  /// delta^i: 1 at component i, 0 elsewhere.
  static MultiIndex unit(const std::string& id);
  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
};

struct ParabolicLineBundle {
  ChowElement c1;
  RationalDivisor twist;

  friend bool operator==(const ParabolicLineBundle&, const ParabolicLineBundle&) = default;
};

/// A class in K_0 of locally abelian parabolic bundles, kept as an
/// unreduced list of terms.
class ParabolicKClass {
public:
  struct Term {
    long mult;
    ParabolicLineBundle bundle;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit ParabolicKClass(DivisorPtr divisor);
  ParabolicKClass(DivisorPtr divisor, std::vector<Term> terms);

  /// Trivial bundle of rank r.
  static ParabolicKClass trivial(DivisorPtr divisor, long rank);
  /// O(B) for the line bundle with first Chern class c1 (zero by default).
  static ParabolicKClass lineBundle(DivisorPtr divisor, const RationalDivisor& twist);
  static ParabolicKClass lineBundle(DivisorPtr divisor, ChowElement c1, const RationalDivisor& twist);

  const DivisorPtr& divisor() const { return divisor_; }
  const ModelPtr& model() const { return divisor_->model(); }
  const std::vector<Term>& terms() const { return terms_; }
  long rank() const;

  void add(long mult, ParabolicLineBundle bundle);

  /// Direct sum: concatenation of terms.
  friend ParabolicKClass operator+(const ParabolicKClass& a, const ParabolicKClass& b);

private:
  void check(const ParabolicLineBundle& b) const;

  DivisorPtr divisor_;
  std::vector<Term> terms_;
};

/// Term lists equal as multisets (multiplicities of equal line bundles summed).
bool sameTerms(const ParabolicKClass& a, const ParabolicKClass& b);

/// F_beta: each twist coefficient b_i replaced by floor(b_i + beta_i).
ParabolicKClass constituent(const ParabolicKClass& f, const MultiIndex& beta);

ParabolicKClass tensorPar(const ParabolicKClass& f, const ParabolicKClass& g);

/// sum over terms of mult * exp(c1 + B).
ChowElement chPar(const ParabolicKClass& f);

/// f^* on divisors: each component D_i of the codomain-side divisor pulls back
/// to an integer combination of components upstairs.
class DivisorPullback {
public:
  /// Throws InvalidInput when an image is not integral or disagrees with the
  /// ring map on divisor classes.
  DivisorPullback(LinearMap map, DivisorPtr below, DivisorPtr above, std::map<std::string, RationalDivisor> images);

  static DivisorPullback identity(DivisorPtr divisor);

  const LinearMap& map() const { return map_; }
  const DivisorPtr& below() const { return below_; }
  const DivisorPtr& above() const { return above_; }
  /// f^*(D_i); zero when unlisted.
  RationalDivisor image(const std::string& id) const;
  RationalDivisor pullDivisor(const RationalDivisor& b) const;

private:
  LinearMap map_;
  DivisorPtr below_;
  DivisorPtr above_;
  std::map<std::string, RationalDivisor> images_;
};

/// (g∘f)^* = f^*∘g^*: `first` is applied first.
DivisorPullback compose(const DivisorPullback& second, const DivisorPullback& first);

ParabolicKClass pullbackPar(const DivisorPullback& f, const ParabolicKClass& bundle);

/// Weights in [0,1) with multiplicities summed over terms; zero totals dropped.
using WeightMultiset = std::map<Rational, long>;

WeightMultiset weightsAlong(const ParabolicKClass& f, const std::string& componentId);

struct DifferenceOverD {
  ChowElement difference;  // chPar(F) - chPar(F_alpha)
  bool supportedOnD;
};

DifferenceOverD diffOverD(const ParabolicKClass& f, const MultiIndex& alpha);

}  // namespace parchern
