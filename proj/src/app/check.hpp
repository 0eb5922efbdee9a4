#pragma once

#include <string>
#include <vector>

#include "app/reports.hpp"

namespace galoisdr {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  /// Non-blocking checks are reported but never fail the suite.
  bool blocking = true;
  json detail;
  double millis = 0;
};

/// Known suite names: "all", "acceptance", "invariants".
const std::vector<std::string>& check_suite_names();

/// Runs a suite in a fixed order. Throws InvalidArgument for an unknown
/// name. A check that throws is recorded as failed with the error text.
std::vector<CheckResult> run_checks(const std::string& suite);

/// {suite, checks: [{id, description, passed, blocking, detail}], passed,
/// failed, warnings}; per-check milliseconds go to `timing`.
json check_report(const std::string& suite, json& timing);

/// True when no blocking check failed.
bool check_report_passed(const json& report);

}  // namespace galoisdr
