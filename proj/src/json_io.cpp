#include "parchern/json_io.hpp"

#include <fstream>
#include <sstream>

#include "parchern/corpus.hpp"

namespace parchern {

namespace {

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path.empty() ? "/" : path, what); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

const json* optionalField(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& arrayAt(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) fail(sub(path, key), "expected an array");
  return v;
}

long integerFrom(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long>();
}

std::string stringFrom(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> stringList(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(stringFrom(v[i], sub(path, i)));
  return out;
}

LabelledCoords labelledFrom(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object of label: \"p/q\"");
  LabelledCoords out;
  for (auto it = v.begin(); it != v.end(); ++it) out[it.key()] = rationalFromJson(it.value(), sub(path, it.key()));
  return out;
}

Poly polyFrom(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Poly(Rational(v.get<long>()));
  if (!v.is_string()) fail(path, "expected a polynomial string");
  try {
    return Poly::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

PolyMatrix polyMatrixFrom(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a matrix (array of rows)");
  if (v.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != cols) fail(sub(path, i), "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = polyFrom(row[j], sub(sub(path, i), j));
  }
  return m;
}

json polyMatrixToJson(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Matrix> blocksFrom(const json& v, const ChowModel& domain, const ChowModel& codomain, int shift,
                               const std::string& path) {
  if (v.is_object()) {
    // Images of basis labels.
    std::map<std::string, LabelledCoords> images;
    for (auto it = v.begin(); it != v.end(); ++it) images[it.key()] = labelledFrom(it.value(), sub(path, it.key()));
    try {
      return LinearMap::blocksFromImages(domain, codomain, shift, images);
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (!v.is_array() || static_cast<int>(v.size()) != domain.dimension() + 1)
    fail(path, "expected one matrix per domain degree (" + std::to_string(domain.dimension() + 1) + ")");
  std::vector<Matrix> blocks;
  for (int k = 0; k <= domain.dimension(); ++k) {
    const std::string p = sub(path, static_cast<std::size_t>(k));
    const json& rows = v[static_cast<std::size_t>(k)];
    const std::size_t nr = codomain.rank(k - shift), nc = domain.rank(k);
    if (!rows.is_array() || rows.size() != nr) fail(p, "expected " + std::to_string(nr) + " rows");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      if (!rows[i].is_array() || rows[i].size() != nc) fail(sub(p, i), "expected " + std::to_string(nc) + " columns");
      for (std::size_t c = 0; c < nc; ++c) m(i, c) = rationalFromJson(rows[i][c], sub(sub(p, i), c));
    }
    blocks.push_back(std::move(m));
  }
  return blocks;
}

ModelPtr modelRef(const json& v, ModelRegistry& models, const std::string& path) {
  if (v.is_string()) {
    try {
      return models.find(v.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (v.is_object()) {
    ModelPtr m = modelFromJson(v);
    models.add(m);
    return m;
  }
  fail(path, "expected a model name or an inline model");
}

}  // namespace

json loadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ":byte " + std::to_string(e.byte), e.what());
  }
}

void ModelRegistry::add(const ModelPtr& model) { user_[model->name()] = model; }

ModelPtr ModelRegistry::find(const std::string& name) const {
  if (auto it = user_.find(name); it != user_.end()) return it->second;
  return Corpus::instance().model(name);
}

Rational rationalFromJson(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parseRational(value.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

json rationalToJson(const Rational& value) { return toString(value); }

// ---------------------------------------------------------------------------
// models and elements

ChowModelData modelDataFromJson(const json& j, const std::string& fallbackName) {
  std::string name = fallbackName;
  if (const json* n = optionalField(j, "name", "")) name = stringFrom(*n, "/name");
  const long dimension = integerFrom(field(j, "dimension", ""), "/dimension");
  const json& basisJson = arrayAt(j, "basis", "");
  if (dimension < 0 || static_cast<long>(basisJson.size()) != dimension + 1)
    fail("/basis", "expected dimension + 1 = " + std::to_string(dimension + 1) + " degree lists");
  std::vector<std::vector<std::string>> basis;
  for (std::size_t k = 0; k < basisJson.size(); ++k) basis.push_back(stringList(basisJson[k], sub("/basis", k)));

  ChowModelData data(name, std::move(basis));
  if (const json* products = optionalField(j, "products", "")) {
    if (!products->is_array()) fail("/products", "expected an array");
    for (std::size_t i = 0; i < products->size(); ++i) {
      const std::string p = sub("/products", i);
      const json& e = (*products)[i];
      try {
        data.setProduct(stringFrom(field(e, "a", p), sub(p, "a")), stringFrom(field(e, "b", p), sub(p, "b")),
                        labelledFrom(field(e, "result", p), sub(p, "result")));
      } catch (const InvalidInput& err) {
        fail(p, err.what());
      }
    }
  }
  if (const json* divisors = optionalField(j, "divisors", "")) {
    try {
      if (divisors->is_array()) {
        for (std::size_t i = 0; i < divisors->size(); ++i) {
          const std::string label = stringFrom((*divisors)[i], sub("/divisors", i));
          data.addDivisor(label, {{label, Rational(1)}});
        }
      } else if (divisors->is_object()) {
        for (auto it = divisors->begin(); it != divisors->end(); ++it)
          data.addDivisor(it.key(), labelledFrom(it.value(), sub("/divisors", it.key())));
      } else {
        fail("/divisors", "expected an array of labels or an object");
      }
    } catch (const InvalidInput& err) {
      fail("/divisors", err.what());
    }
  }
  return data;
}

ModelPtr modelFromJson(const json& j, const std::string& fallbackName) {
  return ChowModel::create(modelDataFromJson(j, fallbackName));
}

json modelToJson(const ChowModel& model) {
  json j;
  j["name"] = model.name();
  j["dimension"] = model.dimension();
  j["basis"] = model.basis();
  json products = json::array();
  for (std::size_t a = 0; a < model.size(); ++a)
    for (std::size_t b = a; b < model.size(); ++b) {
      if (model.label(a) == "1" || model.label(b) == "1") continue;
      const ChowElement p(model.shared_from_this(), model.product(a, b));
      if (p.isZero()) continue;
      products.push_back({{"a", model.label(a)}, {"b", model.label(b)}, {"result", elementToJson(p)}});
    }
  j["products"] = std::move(products);
  json divisors = json::object();
  for (const auto& name : model.divisorNames()) divisors[name] = elementToJson(model.divisorClass(name));
  j["divisors"] = std::move(divisors);
  return j;
}

ChowElement elementFromJson(const json& j, const ModelPtr& model, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != model->size()) fail(path, "expected " + std::to_string(model->size()) + " coordinates");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rationalFromJson(j[i], sub(path, i)));
    return ChowElement(model, std::move(v));
  }
  const LabelledCoords coords = labelledFrom(j, path);
  for (const auto& [label, value] : coords)
    if (!model->indexOf(label)) fail(sub(path, label), "model " + model->name() + " has no basis element \"" + label + "\"");
  return model->element(coords);
}

json elementToJson(const ChowElement& x) {
  json j = json::object();
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    if (sgn(x[i]) != 0) j[x.model()->label(i)] = toString(x[i]);
  return j;
}

// ---------------------------------------------------------------------------
// bundles and connections

namespace {

DivisorPtr divisorFrom(const json& j, const ModelPtr& model, const std::string& path) {
  if (const json* ids = optionalField(j, "divisor", path)) {
    try {
      return std::make_shared<const NormalCrossingsDivisor>(model, stringList(*ids, sub(path, "divisor")));
    } catch (const InvalidInput& e) {
      fail(sub(path, "divisor"), e.what());
    }
  }
  return NormalCrossingsDivisor::whole(model);
}

ParabolicKClass termsFrom(const json& terms, const DivisorPtr& divisor, const std::string& path) {
  if (!terms.is_array()) fail(path, "expected an array of terms");
  ParabolicKClass f(divisor);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = sub(path, i);
    const json& t = terms[i];
    const long mult = integerFrom(field(t, "mult", p), sub(p, "mult"));
    ChowElement c1 = divisor->model()->zero();
    if (const json* c = optionalField(t, "c1", p)) c1 = elementFromJson(*c, divisor->model(), sub(p, "c1"));
    RationalDivisor twist;
    if (const json* tw = optionalField(t, "twist", p))
      for (const auto& [id, v] : labelledFrom(*tw, sub(p, "twist"))) twist.set(id, v);
    try {
      f.add(mult, {std::move(c1), std::move(twist)});
    } catch (const Error& e) {
      fail(p, e.what());
    }
  }
  return f;
}

ModelPtr namedModel(const json& j, const ModelRegistry& models, const std::string& path) {
  const std::string name = stringFrom(field(j, "model", path), sub(path, "model"));
  try {
    return models.find(name);
  } catch (const Error& e) {
    fail(sub(path, "model"), e.what());
  }
}

}  // namespace

ParabolicKClass bundleFromJson(const json& j, const ModelRegistry& models, const std::string& path) {
  const ModelPtr model = namedModel(j, models, path);
  return termsFrom(field(j, "terms", path), divisorFrom(j, model, path), sub(path, "terms"));
}

json bundleToJson(const ParabolicKClass& f) {
  json j;
  j["model"] = f.model()->name();
  j["divisor"] = f.divisor()->ids();
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json twist = json::object();
    for (const auto& [id, v] : t.bundle.twist.coefficients()) twist[id] = toString(v);
    terms.push_back({{"mult", t.mult}, {"c1", elementToJson(t.bundle.c1)}, {"twist", std::move(twist)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

AbelianLogConnection connectionFromJson(const json& j, const ModelPtr& model, const std::string& path) {
  const long rank = integerFrom(field(j, "rank", path), sub(path, "rank"));
  const json& pieces = arrayAt(j, "pieces", path);
  if (static_cast<long>(pieces.size()) != rank)
    fail(sub(path, "pieces"), "rank " + std::to_string(rank) + " needs exactly that many rank-one pieces");
  std::vector<RankOnePiece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string p = sub(sub(path, "pieces"), i);
    RankOnePiece piece{model->zero(), {}};
    if (const json* c = optionalField(pieces[i], "c1", p)) piece.c1 = elementFromJson(*c, model, sub(p, "c1"));
    if (const json* e = optionalField(pieces[i], "eigenvalues", p))
      for (const auto& [id, v] : labelledFrom(*e, sub(p, "eigenvalues"))) piece.eigenvalues[id] = v;
    out.push_back(std::move(piece));
  }
  try {
    return AbelianLogConnection(std::move(out));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

// ---------------------------------------------------------------------------
// families

FamilyModel familyFromJson(const json& j, ModelRegistry& models) {
  FamilyData data;
  data.name = j.contains("name") ? stringFrom(j["name"], "/name") : "user-family";
  data.total = modelRef(field(j, "total", ""), models, "/total");
  data.base = modelRef(field(j, "base", ""), models, "/base");
  data.pullbackBlocks = blocksFrom(field(j, "pullback", ""), *data.base, *data.total, 0, "/pullback");
  data.pushforwardBlocks = blocksFrom(field(j, "pushforward", ""), *data.total, *data.base, 1, "/pushforward");
  data.toddRelative = elementFromJson(field(j, "todd", ""), data.total, "/todd").coords();
  data.logCotangentC1 = elementFromJson(field(j, "logCotangent", ""), data.total, "/logCotangent").coords();
  if (const json* h = optionalField(j, "horizontal", "")) data.horizontal = stringList(*h, "/horizontal");
  if (const json* v = optionalField(j, "vertical", "")) data.vertical = stringList(*v, "/vertical");
  return FamilyModel::create(std::move(data));
}

// ---------------------------------------------------------------------------
// complexes

LogComplex complexFromJson(const json& j) {
  LogComplexData data;
  data.order = static_cast<int>(integerFrom(field(j, "N", ""), "/N"));
  const json& ranks = arrayAt(j, "ranks", "");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const long r = integerFrom(ranks[i], sub("/ranks", i));
    if (r < 0) fail(sub("/ranks", i), "ranks must be non-negative");
    data.ranks.push_back(static_cast<std::size_t>(r));
  }
  const std::size_t n = data.ranks.size();
  const json& d = arrayAt(j, "d", "");
  if (d.size() + 1 != n) fail("/d", "expected " + std::to_string(n == 0 ? 0 : n - 1) + " differentials");
  for (std::size_t i = 0; i < d.size(); ++i)
    data.d.push_back(polyMatrixFrom(d[i], data.ranks[i + 1], data.ranks[i], sub("/d", i)));
  for (const char* key : {"M0", "M1"}) {
    const json& list = arrayAt(j, key, "");
    if (list.size() != n) fail(std::string("/") + key, "expected one matrix per term");
    auto& target = std::string(key) == "M0" ? data.m0 : data.m1;
    for (std::size_t i = 0; i < n; ++i)
      target.push_back(polyMatrixFrom(list[i], data.ranks[i], data.ranks[i], sub(std::string("/") + key, i)));
  }
  return LogComplex::create(std::move(data));
}

json complexToJson(const LogComplex& c) {
  json j;
  j["N"] = c.order();
  j["ranks"] = c.ranks();
  json d = json::array(), m0 = json::array(), m1 = json::array();
  for (const auto& m : c.d()) d.push_back(polyMatrixToJson(m));
  for (const auto& m : c.m0()) m0.push_back(polyMatrixToJson(m));
  for (const auto& m : c.m1()) m1.push_back(polyMatrixToJson(m));
  j["d"] = std::move(d);
  j["M0"] = std::move(m0);
  j["M1"] = std::move(m1);
  return j;
}

// ---------------------------------------------------------------------------
// ledgers

std::pair<std::vector<LedgerEntry>, std::vector<LedgerEntry>> ledgerFromJson(const json& j, const ModelRegistry& models) {
  const ModelPtr model = namedModel(j, models, "");
  auto side = [&](const char* key) {
    std::vector<LedgerEntry> entries;
    const json& list = arrayAt(j, key, "");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p = sub(std::string("/") + key, i);
      const json& e = list[i];
      const long sign = integerFrom(field(e, "sign", p), sub(p, "sign"));
      if (sign != 1 && sign != -1) fail(sub(p, "sign"), "sign must be +1 or -1");
      LedgerEntry entry{static_cast<int>(sign), stringFrom(field(e, "label", p), sub(p, "label")),
                        integerFrom(field(e, "rank", p), sub(p, "rank")), model->zero()};
      if (const json* c = optionalField(e, "class", p)) entry.cls = elementFromJson(*c, model, sub(p, "class"));
      else entry.cls = Rational(entry.rank) * model->one();
      if (entry.cls[0] != entry.rank) fail(sub(p, "class"), "degree-0 part of the class must equal the rank");
      entries.push_back(std::move(entry));
    }
    return entries;
  };
  return {side("lhs"), side("rhs")};
}

DegreeLedger degreeLedgerFromJson(const json& j, const ModelRegistry& models) {
  const ModelPtr model = namedModel(j, models, "");
  DegreeLedger ledger{divisorFrom(j, model, ""), {}};
  const json& degrees = arrayAt(j, "degrees", "");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string p = sub("/degrees", i);
    const long degree = integerFrom(field(degrees[i], "degree", p), sub(p, "degree"));
    ledger.degrees.emplace_back(static_cast<int>(degree), termsFrom(field(degrees[i], "terms", p), ledger.divisor, sub(p, "terms")));
  }
  return ledger;
}

}  // namespace parchern
