#pragma once

// Named verification scenarios over the built-in corpus or user files.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parchern/report.hpp"

namespace parchern {

struct ScenarioParam {
  std::string name;
  std::string defaultValue;
  std::string help;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<ScenarioParam> params;
  std::string input;  // what --input accepts; empty when not accepted
};

std::vector<ScenarioInfo> listScenarios();

struct ScenarioOptions {
  std::map<std::string, std::string> params;
  std::optional<std::filesystem::path> input;
};

/// Throws InvalidInput for unknown scenarios or parameters and ParseError
/// for malformed input files.
Report runScenario(const std::string& name, const ScenarioOptions& options = {});

struct LedgerBalance {
  ChowElement lhs;  // sum of sign * class over the left entries
  ChowElement rhs;
  ChowElement difference;
  bool equal;
};

/// Both sides must live on one model; throws ModelMismatch otherwise.
LedgerBalance lefschetzLedger(const std::vector<LedgerEntry>& lhs, const std::vector<LedgerEntry>& rhs);

/// sum_i (-1)^i chPar(E^i) must have no positive-degree part.
Report mainTheoremInstance(const DegreeLedger& ledger);

/// Appends the checks of mainTheoremInstance to an existing report.
void mainTheoremChecks(Report& report, const DegreeLedger& ledger, const std::string& label);

}  // namespace parchern
