#include "parchern/chow.hpp"

#include <set>
#include <sstream>

namespace parchern {

// ---------------------------------------------------------------------------
// ChowModelData

ChowModelData::ChowModelData(std::string name, std::vector<std::vector<std::string>> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    offsets_.push_back(labels_.size());
    for (const auto& l : basis_[k]) {
      labels_.push_back(l);
      degrees_.push_back(static_cast<int>(k));
    }
  }
  offsets_.push_back(labels_.size());
}

std::optional<std::size_t> ChowModelData::indexOf(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Vector ChowModelData::toFlat(const LabelledCoords& coords) const {
  Vector v(labels_.size());
  for (const auto& [label, value] : coords) {
    auto idx = indexOf(label);
    if (!idx) throw InvalidInput("model " + name_ + ": unknown basis label \"" + label + "\"");
    v[*idx] = value;
  }
  return v;
}

ChowModelData& ChowModelData::setProduct(const std::string& a, const std::string& b, const LabelledCoords& result) {
  auto ia = indexOf(a), ib = indexOf(b);
  if (!ia) throw InvalidInput("model " + name_ + ": unknown basis label \"" + a + "\"");
  if (!ib) throw InvalidInput("model " + name_ + ": unknown basis label \"" + b + "\"");
  explicit_[{*ia, *ib}] = toFlat(result);
  return *this;
}

ChowModelData& ChowModelData::addDivisor(const std::string& name, const LabelledCoords& cls) {
  divisors_.emplace_back(name, toFlat(cls));
  return *this;
}

Vector ChowModelData::product(std::size_t a, std::size_t b) const {
  if (auto it = explicit_.find({a, b}); it != explicit_.end()) return it->second;
  if (auto it = explicit_.find({b, a}); it != explicit_.end()) return it->second;
  Vector v(labels_.size());
  if (degreeOf(a) + degreeOf(b) > dimension()) return v;
  if (labels_[a] == "1") v[b] = 1;
  else if (labels_[b] == "1") v[a] = 1;
  return v;
}

// ---------------------------------------------------------------------------
// validation

namespace {

Vector multiplyFlat(const ChowModelData& data, const Vector& x, const Vector& y) {
  Vector out(data.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Vector p = data.product(i, j);
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < p.size(); ++k)
        if (sgn(p[k]) != 0) out[k] += c * p[k];
    }
  }
  return out;
}

Vector unitVector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

ValidationReport failure(std::string axiom, std::vector<std::string> labels, std::string detail) {
  return ValidationReport{false, std::move(axiom), std::move(labels), std::move(detail)};
}

ValidationReport checkStructure(const ChowModelData& data) {
  if (data.basis().empty()) return failure("structure", {}, "no degrees");
  if (data.basis()[0].size() != 1 || data.basis()[0][0] != "1")
    return failure("structure", data.basis()[0], "degree-0 basis must be exactly {1}");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < data.size(); ++i)
    if (!seen.insert(data.label(i)).second)
      return failure("structure", {data.label(i)}, "duplicate basis label");
  for (std::size_t a = 0; a < data.size(); ++a)
    for (std::size_t b = 0; b < data.size(); ++b) {
      const int deg = data.degreeOf(a) + data.degreeOf(b);
      const Vector p = data.product(a, b);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (sgn(p[k]) != 0 && data.degreeOf(k) != deg)
          return failure("structure", {data.label(a), data.label(b)},
                         "product has a component outside degree " + std::to_string(deg));
    }
  std::set<std::string> divisorNames;
  for (const auto& [name, cls] : data.divisors()) {
    if (!divisorNames.insert(name).second) return failure("structure", {name}, "duplicate divisor name");
    for (std::size_t k = 0; k < cls.size(); ++k)
      if (sgn(cls[k]) != 0 && data.degreeOf(k) != 1)
        return failure("structure", {name}, "divisor class is not of degree 1");
  }
  return {};
}

}  // namespace

ValidationReport validateModel(const ChowModelData& data) {
  if (auto r = checkStructure(data); !r.ok) return r;
  const std::size_t n = data.size();

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (data.product(a, b) != data.product(b, a))
        return failure("commutativity", {data.label(a), data.label(b)}, "a*b != b*a");

  // Positive-degree elements first, the unit last.
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < n; ++i) order.push_back(i);
  order.push_back(0);
  for (auto a : order)
    for (auto b : order)
      for (auto c : order) {
        if (data.degreeOf(a) + data.degreeOf(b) + data.degreeOf(c) > data.dimension()) continue;
        const Vector left = multiplyFlat(data, data.product(a, b), unitVector(n, c));
        const Vector right = multiplyFlat(data, unitVector(n, a), data.product(b, c));
        if (left != right)
          return failure("associativity", {data.label(a), data.label(b), data.label(c)}, "(a*b)*c != a*(b*c)");
      }

  for (std::size_t a = 0; a < n; ++a)
    if (data.product(0, a) != unitVector(n, a) || data.product(a, 0) != unitVector(n, a))
      return failure("unit", {data.label(a)}, "1*a != a");
  return {};
}

namespace {

std::string describe(const ValidationReport& r) {
  std::string s = "invalid model: " + r.axiom;
  if (!r.labels.empty()) {
    s += " (";
    for (std::size_t i = 0; i < r.labels.size(); ++i) s += (i ? "," : "") + r.labels[i];
    s += ")";
  }
  if (!r.detail.empty()) s += ": " + r.detail;
  return s;
}

}  // namespace

InvalidModel::InvalidModel(ValidationReport report) : InvalidInput(describe(report)), report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// ChowModel

ModelPtr ChowModel::create(const ChowModelData& data) {
  if (auto report = validateModel(data); !report.ok) throw InvalidModel(std::move(report));
  std::shared_ptr<ChowModel> m(new ChowModel());
  m->name_ = data.name();
  m->dimension_ = data.dimension();
  m->basis_ = data.basis();
  for (std::size_t i = 0; i < data.size(); ++i) {
    m->labels_.push_back(data.label(i));
    m->degrees_.push_back(data.degreeOf(i));
  }
  for (int k = 0; k <= m->dimension_ + 1; ++k) m->offsets_.push_back(data.offset(k));
  m->table_.reserve(data.size() * data.size());
  for (std::size_t a = 0; a < data.size(); ++a)
    for (std::size_t b = 0; b < data.size(); ++b) m->table_.push_back(data.product(a, b));
  m->divisors_ = data.divisors();
  return m;
}

std::size_t ChowModel::rank(int degree) const {
  if (degree < 0 || degree > dimension_) return 0;
  return offsets_[degree + 1] - offsets_[degree];
}

std::optional<std::size_t> ChowModel::indexOf(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t ChowModel::requireIndex(std::string_view label) const {
  if (auto i = indexOf(label)) return *i;
  throw DomainError("model " + name_ + " has no basis element \"" + std::string(label) + "\"");
}

std::vector<std::string> ChowModel::divisorNames() const {
  std::vector<std::string> names;
  for (const auto& d : divisors_) names.push_back(d.first);
  return names;
}

bool ChowModel::hasDivisor(std::string_view name) const {
  for (const auto& d : divisors_)
    if (d.first == name) return true;
  return false;
}

ChowElement ChowModel::divisorClass(std::string_view name) const {
  for (const auto& d : divisors_)
    if (d.first == name) return ChowElement(shared_from_this(), d.second);
  throw DomainError("model " + name_ + " has no divisor component \"" + std::string(name) + "\"");
}

ChowElement ChowModel::zero() const { return ChowElement(shared_from_this(), Vector(size())); }

ChowElement ChowModel::one() const { return basisElement("1"); }

ChowElement ChowModel::basisElement(std::string_view label) const {
  Vector v(size());
  v[requireIndex(label)] = 1;
  return ChowElement(shared_from_this(), std::move(v));
}

ChowElement ChowModel::element(const LabelledCoords& coords) const {
  Vector v(size());
  for (const auto& [label, value] : coords) v[requireIndex(label)] = value;
  return ChowElement(shared_from_this(), std::move(v));
}

// ---------------------------------------------------------------------------
// ChowElement

ChowElement::ChowElement(ModelPtr model, Vector coords) : model_(std::move(model)), coords_(std::move(coords)) {
  if (!model_) throw DomainError("element without a model");
  if (coords_.size() != model_->size())
    throw DomainError("coordinate vector of length " + std::to_string(coords_.size()) + " for model " +
                      model_->name() + " of size " + std::to_string(model_->size()));
}

Rational ChowElement::coeff(std::string_view label) const { return coords_[model_->requireIndex(label)]; }

bool ChowElement::isZero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool ChowElement::inDegreeZero() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

bool ChowElement::isHomogeneous(int degree) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0 && model_->degreeOf(i) != degree) return false;
  return true;
}

LabelledCoords ChowElement::toLabelled() const {
  LabelledCoords out;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) out.emplace(model_->label(i), coords_[i]);
  return out;
}

std::string ChowElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    const std::string& label = model_->label(i);
    if (label == "1") os << mag.get_str();
    else if (mag == 1) os << label;
    else os << mag.get_str() << "*" << label;
    first = false;
  }
  return first ? "0" : os.str();
}

void ChowElement::requireSameModel(const ChowElement& other) const {
  if (model_ != other.model_)
    throw ModelMismatch("elements of models " + model_->name() + " and " + other.model_->name());
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  requireSameModel(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  requireSameModel(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ChowElement& ChowElement::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) { return mul(a, b); }

bool operator==(const ChowElement& a, const ChowElement& b) {
  return a.model_ == b.model_ && a.coords_ == b.coords_;
}

// ---------------------------------------------------------------------------
// operations

ChowElement mul(const ChowElement& x, const ChowElement& y) {
  if (x.model() != y.model())
    throw ModelMismatch("product of elements of models " + x.model()->name() + " and " + y.model()->name());
  const ChowModel& m = *x.model();
  Vector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (sgn(y[j]) == 0 || m.degreeOf(i) + m.degreeOf(j) > m.dimension()) continue;
      const Vector& p = m.product(i, j);
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < p.size(); ++k)
        if (sgn(p[k]) != 0) out[k] += c * p[k];
    }
  }
  return ChowElement(x.model(), std::move(out));
}

ChowElement expClass(const ChowElement& x) {
  if (sgn(x[0]) != 0) throw DomainError("exp of an element with nonzero degree-0 part " + x[0].get_str());
  const ChowModel& m = *x.model();
  ChowElement sum = m.one();
  ChowElement power = m.one();
  for (int k = 1; k <= m.dimension(); ++k) {
    power = mul(power, x) * Rational(1, k);
    sum += power;
  }
  return sum;
}

ChowElement gradedPart(const ChowElement& x, int degree) {
  const ChowModel& m = *x.model();
  if (degree < 0 || degree > m.dimension())
    throw DomainError("degree " + std::to_string(degree) + " outside 0.." + std::to_string(m.dimension()));
  Vector v(m.size());
  for (std::size_t i = m.offset(degree); i < m.offset(degree + 1); ++i) v[i] = x[i];
  return ChowElement(x.model(), std::move(v));
}

bool idealMembership(const ChowElement& x, std::span<const ChowElement> components) {
  const ChowModel& m = *x.model();
  for (const auto& c : components) {
    if (c.model() != x.model()) throw ModelMismatch("ideal generator from model " + c.model()->name());
    if (!c.isHomogeneous(1)) throw DomainError("ideal generators must be degree-1 classes");
  }
  if (sgn(x[0]) != 0) return false;
  for (int k = 1; k <= m.dimension(); ++k) {
    const std::size_t lo = m.offset(k), n = m.rank(k);
    std::vector<Vector> spanning;
    for (const auto& c : components)
      for (std::size_t b = m.offset(k - 1); b < m.offset(k); ++b) {
        const ChowElement prod = mul(c, m.basisElement(m.label(b)));
        spanning.emplace_back(prod.coords().begin() + lo, prod.coords().begin() + lo + n);
      }
    Vector target(x.coords().begin() + lo, x.coords().begin() + lo + n);
    bool zero = true;
    for (const auto& t : target) zero = zero && sgn(t) == 0;
    if (zero) continue;
    if (spanning.empty() || !solve(Matrix::fromColumns(n, spanning), target)) return false;
  }
  return true;
}

bool idealMembership(const ChowElement& x, const std::vector<std::string>& componentNames) {
  std::vector<ChowElement> classes;
  for (const auto& name : componentNames) classes.push_back(x.model()->divisorClass(name));
  return idealMembership(x, classes);
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(MapKind kind, ModelPtr domain, ModelPtr codomain, int shift, std::vector<Matrix> blocks)
    : kind_(kind), domain_(std::move(domain)), codomain_(std::move(codomain)), shift_(shift), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != domain_->dimension() + 1)
    throw InvalidInput("linear map needs one block per domain degree");
  for (int k = 0; k <= domain_->dimension(); ++k) {
    const Matrix& b = blocks_[k];
    if (b.cols() != domain_->rank(k) || b.rows() != codomain_->rank(k - shift_))
      throw InvalidInput("linear map block for degree " + std::to_string(k) + " has shape " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                         std::to_string(codomain_->rank(k - shift_)) + "x" + std::to_string(domain_->rank(k)));
  }
}

std::vector<Matrix> LinearMap::blocksFromImages(const ChowModel& domain, const ChowModel& codomain, int shift,
                                                const std::map<std::string, LabelledCoords>& images) {
  std::vector<Matrix> blocks;
  for (int k = 0; k <= domain.dimension(); ++k) blocks.emplace_back(codomain.rank(k - shift), domain.rank(k));
  for (const auto& [label, image] : images) {
    const std::size_t src = domain.requireIndex(label);
    const int k = domain.degreeOf(src);
    for (const auto& [tl, value] : image) {
      const std::size_t dst = codomain.requireIndex(tl);
      if (codomain.degreeOf(dst) != k - shift)
        throw InvalidInput("image of " + label + " has a component " + tl + " of the wrong degree");
      blocks[k](dst - codomain.offset(k - shift), src - domain.offset(k)) = value;
    }
  }
  return blocks;
}

LinearMap LinearMap::pullback(ModelPtr domain, ModelPtr codomain, std::vector<Matrix> blocks) {
  LinearMap f(MapKind::Pullback, std::move(domain), std::move(codomain), 0, std::move(blocks));
  const ChowModel& src = *f.domain_;
  if (!(f(src.one()) == f.codomain_->one())) throw InvalidInput("pullback does not preserve the unit");
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = a; b < src.size(); ++b) {
      const ChowElement ea = src.basisElement(src.label(a)), eb = src.basisElement(src.label(b));
      if (!(f(mul(ea, eb)) == mul(f(ea), f(eb))))
        throw InvalidInput("pullback is not multiplicative on (" + src.label(a) + "," + src.label(b) + ")");
    }
  return f;
}

LinearMap LinearMap::pushforward(ModelPtr domain, ModelPtr codomain, int shift, std::vector<Matrix> blocks) {
  if (shift < 0) throw InvalidInput("pushforward shift must be non-negative");
  return LinearMap(MapKind::Pushforward, std::move(domain), std::move(codomain), shift, std::move(blocks));
}

LinearMap LinearMap::identity(ModelPtr model) {
  std::vector<Matrix> blocks;
  for (int k = 0; k <= model->dimension(); ++k) blocks.push_back(Matrix::identity(model->rank(k)));
  return LinearMap(MapKind::Pullback, model, model, 0, std::move(blocks));
}

ChowElement LinearMap::operator()(const ChowElement& x) const {
  if (x.model() != domain_)
    throw ModelMismatch("map from " + domain_->name() + " applied to an element of " + x.model()->name());
  Vector out(codomain_->size());
  for (int k = 0; k <= domain_->dimension(); ++k) {
    const Matrix& b = blocks_[k];
    if (b.rows() == 0) continue;
    const Vector part(x.coords().begin() + domain_->offset(k), x.coords().begin() + domain_->offset(k + 1));
    const Vector image = b.apply(part);
    const std::size_t lo = codomain_->offset(k - shift_);
    for (std::size_t r = 0; r < image.size(); ++r) out[lo + r] += image[r];
  }
  return ChowElement(codomain_, std::move(out));
}

ChowElement applyMap(const LinearMap& f, const ChowElement& x) { return f(x); }

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (inner.codomain() != outer.domain()) throw ModelMismatch("maps are not composable");
  if (inner.kind() != outer.kind()) throw DomainError("composition of a pullback with a pushforward");
  const int shift = inner.shift() + outer.shift();
  std::vector<Matrix> blocks;
  for (int k = 0; k <= inner.domain()->dimension(); ++k) {
    const int mid = k - inner.shift();
    if (mid < 0 || mid > outer.domain()->dimension())
      blocks.emplace_back(outer.codomain()->rank(k - shift), inner.domain()->rank(k));
    else
      blocks.push_back(outer.blocks()[mid] * inner.blocks()[k]);
  }
  if (inner.kind() == MapKind::Pullback) return LinearMap::pullback(inner.domain(), outer.codomain(), std::move(blocks));
  return LinearMap::pushforward(inner.domain(), outer.codomain(), shift, std::move(blocks));
}

}  // namespace parchern
