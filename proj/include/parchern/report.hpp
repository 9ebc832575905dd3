#pragma once

#include <string>
#include <vector>

#include "parchern/json_io.hpp"

namespace parchern {

struct Check {
  std::string description;
  bool passed;
  json witness;
};

/// Ordered pass/fail record of one scenario run, with exact witnesses.
class Report {
public:
  Report(std::string scenario, json params);

  /// Appends a check and returns its verdict.
  bool check(std::string description, bool passed, json witness = json::object());

  const std::string& scenario() const { return scenario_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  json toJson() const;
  std::string toText() const;

private:
  std::string scenario_;
  json params_;
  std::vector<Check> checks_;
};

}  // namespace parchern
