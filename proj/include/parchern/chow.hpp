#pragma once

// Finite graded commutative Q-algebras given by structure constants. These
// stand in for the rational Chow ring of a smooth projective variety.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parchern/errors.hpp"
#include "parchern/linalg.hpp"
#include "parchern/rational.hpp"

namespace parchern {

class ChowModel;
using ModelPtr = std::shared_ptr<const ChowModel>;

/// Coordinates keyed by basis label; absent labels are zero.
using LabelledCoords = std::map<std::string, Rational>;

/// Unvalidated description of a model. Products are entered per pair of
/// labels; an entry for (a, b) also defines (b, a) unless (b, a) is entered
/// explicitly. Unentered products with "1" act as the unit, all other
/// unentered products are zero.
class ChowModelData {
public:
  ChowModelData(std::string name, std::vector<std::vector<std::string>> basis);

  ChowModelData& setProduct(const std::string& a, const std::string& b, const LabelledCoords& result);
  ChowModelData& addDivisor(const std::string& name, const LabelledCoords& cls);

  const std::string& name() const { return name_; }
  int dimension() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<std::vector<std::string>>& basis() const { return basis_; }

  std::size_t size() const { return labels_.size(); }
  int degreeOf(std::size_t flat) const { return degrees_[flat]; }
  std::size_t offset(int degree) const { return offsets_[degree]; }
  std::size_t rank(int degree) const { return basis_[degree].size(); }
  const std::string& label(std::size_t flat) const { return labels_[flat]; }
  std::optional<std::size_t> indexOf(std::string_view label) const;

  /// Full-length coordinate vector of the product of basis elements a and b.
  Vector product(std::size_t a, std::size_t b) const;

  const std::vector<std::pair<std::string, Vector>>& divisors() const { return divisors_; }

private:
  Vector toFlat(const LabelledCoords& coords) const;

  std::string name_;
  std::vector<std::vector<std::string>> basis_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> explicit_;
  std::vector<std::pair<std::string, Vector>> divisors_;
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;                // "structure", "commutativity", "associativity", "unit"
  std::vector<std::string> labels;  // basis labels witnessing the failure
  std::string detail;
};

/// Exhaustive check of the ring axioms on all basis pairs/triples.
ValidationReport validateModel(const ChowModelData& data);

class InvalidModel : public InvalidInput {
public:
  explicit InvalidModel(ValidationReport report);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

class ChowElement;

/// A validated model. Immutable; shared by every element living in it.
class ChowModel : public std::enable_shared_from_this<ChowModel> {
public:
  /// Throws InvalidModel when validateModel fails.
  static ModelPtr create(const ChowModelData& data);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank(int degree) const;
  std::size_t offset(int degree) const { return offsets_[degree]; }
  int degreeOf(std::size_t flat) const { return degrees_[flat]; }
  const std::string& label(std::size_t flat) const { return labels_[flat]; }
  const std::vector<std::vector<std::string>>& basis() const { return basis_; }
  std::optional<std::size_t> indexOf(std::string_view label) const;
  std::size_t requireIndex(std::string_view label) const;

  /// Product of two basis elements as a full-length coordinate vector.
  const Vector& product(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

  std::vector<std::string> divisorNames() const;
  bool hasDivisor(std::string_view name) const;
  ChowElement divisorClass(std::string_view name) const;

  ChowElement zero() const;
  ChowElement one() const;
  ChowElement basisElement(std::string_view label) const;
  ChowElement element(const LabelledCoords& coords) const;

private:
  ChowModel() = default;

  std::string name_;
  int dimension_ = 0;
  std::vector<std::vector<std::string>> basis_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;
  std::vector<Vector> table_;
  std::vector<std::pair<std::string, Vector>> divisors_;
};

/// An element of a model: one rational coordinate per basis element.
class ChowElement {
public:
  ChowElement(ModelPtr model, Vector coords);

  const ModelPtr& model() const { return model_; }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t flat) const { return coords_[flat]; }
  Rational coeff(std::string_view label) const;

  bool isZero() const;
  /// True when every positive-degree part vanishes.
  bool inDegreeZero() const;
  /// True when the element is nonzero only in `degree`.
  bool isHomogeneous(int degree) const;

  /// Nonzero coordinates keyed by label.
  LabelledCoords toLabelled() const;
  /// Human-readable form like "2 + 1/2*h - sh".
  std::string str() const;

  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  ChowElement& operator*=(const Rational& scalar);

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator-(ChowElement a) { return a *= Rational(-1); }
  friend ChowElement operator*(ChowElement a, const Rational& s) { return a *= s; }
  friend ChowElement operator*(const Rational& s, ChowElement a) { return a *= s; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend bool operator==(const ChowElement& a, const ChowElement& b);

private:
  void requireSameModel(const ChowElement& other) const;

  ModelPtr model_;
  Vector coords_;
};

ChowElement mul(const ChowElement& x, const ChowElement& y);

/// Truncated exponential sum_{k<=d} x^k / k!. Requires zero constant term.
ChowElement expClass(const ChowElement& x);

/// Degree-k component of x.
ChowElement gradedPart(const ChowElement& x, int degree);

/// Whether x lies in the ideal generated by the given degree-1 classes,
/// decided degree by degree by exact elimination.
bool idealMembership(const ChowElement& x, std::span<const ChowElement> components);
/// Same, with components named from the model's divisor registry.
bool idealMembership(const ChowElement& x, const std::vector<std::string>& componentNames);

enum class MapKind { Pullback, Pushforward };

/// A linear map between two models. Pullbacks are degree-preserving ring
/// homomorphisms; pushforwards lower degree by a fixed relative dimension.
/// blocks()[k] maps degree k of the domain into degree k - shift of the
/// codomain (rows: codomain basis, columns: domain basis).
class LinearMap {
public:
  /// Validates the unit and multiplicativity on every basis pair.
  static LinearMap pullback(ModelPtr domain, ModelPtr codomain, std::vector<Matrix> blocks);
  static LinearMap pushforward(ModelPtr domain, ModelPtr codomain, int shift, std::vector<Matrix> blocks);
  /// Blocks assembled from the images of domain basis labels.
  static std::vector<Matrix> blocksFromImages(const ChowModel& domain, const ChowModel& codomain, int shift,
                                              const std::map<std::string, LabelledCoords>& images);
  static LinearMap identity(ModelPtr model);

  MapKind kind() const { return kind_; }
  int shift() const { return shift_; }
  const ModelPtr& domain() const { return domain_; }
  const ModelPtr& codomain() const { return codomain_; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  ChowElement operator()(const ChowElement& x) const;

private:
  LinearMap(MapKind kind, ModelPtr domain, ModelPtr codomain, int shift, std::vector<Matrix> blocks);

  MapKind kind_;
  ModelPtr domain_;
  ModelPtr codomain_;
  int shift_;
  std::vector<Matrix> blocks_;
};

ChowElement applyMap(const LinearMap& f, const ChowElement& x);

/// outer ∘ inner. Both must be of the same kind.
LinearMap compose(const LinearMap& outer, const LinearMap& inner);

}  // namespace parchern
