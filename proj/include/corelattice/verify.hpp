#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace corelattice::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // computed vs expected on failure, summary on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Registered suites, in acceptance order.
const std::vector<std::string>& suite_names();

// Runs one suite; unknown names raise std::invalid_argument. Theorem
// violations surface as failing checks, never as exceptions.
SuiteReport run_suite(const std::string& name);

std::vector<SuiteReport> run_all();

nlohmann::json report_json(const SuiteReport& report);

}  // namespace corelattice::verify
