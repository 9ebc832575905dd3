#pragma once

// JSON readers and writers for models, elements, bundles, connections,
// families, complexes and ledgers. Rationals travel as "p/q" strings.
// Schema errors are reported as ParseError with a JSON pointer location.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "parchern/grr.hpp"
#include "parchern/logconn.hpp"
#include "parchern/parabolic.hpp"
#include "parchern/steenbrink.hpp"

namespace parchern {

using json = nlohmann::ordered_json;

/// Reads and parses a file; syntax errors carry "file:byte N".
json loadJsonFile(const std::filesystem::path& path);

/// Name lookup for models: user-supplied models first, then the built-in corpus.
class ModelRegistry {
public:
  void add(const ModelPtr& model);
  ModelPtr find(const std::string& name) const;

private:
  std::map<std::string, ModelPtr> user_;
};

Rational rationalFromJson(const json& value, const std::string& path);
json rationalToJson(const Rational& value);

/// { "name"?, "dimension", "basis", "products", "divisors" }. Divisors are
/// either basis labels or an object { componentId: {label: "p/q"} }.
ChowModelData modelDataFromJson(const json& j, const std::string& fallbackName = "user");
ModelPtr modelFromJson(const json& j, const std::string& fallbackName = "user");
json modelToJson(const ChowModel& model);

/// { label: "p/q", ... }, or a flat array of coordinates.
ChowElement elementFromJson(const json& j, const ModelPtr& model, const std::string& path = "");
json elementToJson(const ChowElement& x);

/// { "model", "divisor": [ids], "terms": [{"mult", "c1", "twist"}] }.
ParabolicKClass bundleFromJson(const json& j, const ModelRegistry& models, const std::string& path = "");
json bundleToJson(const ParabolicKClass& f);

/// { "model"?, "rank", "pieces": [{"c1", "eigenvalues"}] }.
AbelianLogConnection connectionFromJson(const json& j, const ModelPtr& model, const std::string& path = "");

/// { "name", "total", "base", "pullback": [blocks], "pushforward": [blocks],
///   "todd", "logCotangent", "horizontal", "vertical" }; models by name or inline.
FamilyModel familyFromJson(const json& j, ModelRegistry& models);

/// { "N", "ranks", "d", "M0", "M1" } with entries polynomial strings in t.
LogComplex complexFromJson(const json& j);
json complexToJson(const LogComplex& c);

struct LedgerEntry {
  int sign;
  std::string label;
  long rank;
  ChowElement cls;
};

/// { "model", "lhs": [entry], "rhs": [entry] }, entry = {"sign","label","rank","class"}.
std::pair<std::vector<LedgerEntry>, std::vector<LedgerEntry>> ledgerFromJson(const json& j, const ModelRegistry& models);

/// Per cohomological degree, a parabolic class on one model.
struct DegreeLedger {
  DivisorPtr divisor;
  std::vector<std::pair<int, ParabolicKClass>> degrees;
};

/// { "model", "divisor", "degrees": [{"degree", "terms"}] }.
DegreeLedger degreeLedgerFromJson(const json& j, const ModelRegistry& models);

}  // namespace parchern
