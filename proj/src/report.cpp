#include "parchern/report.hpp"

#include <sstream>

namespace parchern {

Report::Report(std::string scenario, json params) : scenario_(std::move(scenario)), params_(std::move(params)) {
  if (params_.is_null()) params_ = json::object();
}

bool Report::check(std::string description, bool passed, json witness) {
  checks_.push_back({std::move(description), passed, std::move(witness)});
  return passed;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.passed ? 0 : 1;
  return n;
}

json Report::toJson() const {
  json j;
  j["scenario"] = scenario_;
  j["params"] = params_;
  j["status"] = passed() ? "PASS" : "FAIL";
  json checks = json::array();
  for (std::size_t i = 0; i < checks_.size(); ++i)
    checks.push_back({{"id", i + 1},
                      {"description", checks_[i].description},
                      {"status", checks_[i].passed ? "PASS" : "FAIL"},
                      {"witness", checks_[i].witness}});
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", checks_.size()}, {"passed", checks_.size() - failures()}, {"failed", failures()}};
  return j;
}

std::string Report::toText() const {
  std::ostringstream os;
  os << "scenario: " << scenario_ << "\n";
  if (!params_.empty()) {
    os << "params:";
    for (auto it = params_.begin(); it != params_.end(); ++it)
      os << " " << it.key() << "=" << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    os << "\n";
  }
  for (std::size_t i = 0; i < checks_.size(); ++i) {
    const Check& c = checks_[i];
    os << "[" << (c.passed ? "PASS" : "FAIL") << "] " << (i + 1) << ". " << c.description << "\n";
    for (auto it = c.witness.begin(); it != c.witness.end(); ++it)
      os << "       " << it.key() << " = "
         << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
  }
  os << "summary: " << (checks_.size() - failures()) << "/" << checks_.size() << " checks passed, status "
     << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace parchern
