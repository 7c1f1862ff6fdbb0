#pragma once

// Executable invariant suites. Each suite measures one scalar against a tolerance.

#include <optional>
#include <string>
#include <vector>

namespace lwf::verify {

struct SuiteResult {
  std::string id;
  std::string title;
  bool pass = false;
  double metric = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteInfo {
  std::string id;
  std::string title;
  bool in_default_run;
};

/// special, laguerre, circle, formula, prop41, isometry, derivative, density (default run) and threshold.
const std::vector<SuiteInfo>& suites();

/// Runs one suite. A given `tolerance_override` replaces the suite tolerance; a suite passes only
/// when its tolerance is positive and metric ≤ tolerance. Unknown ids throw std::invalid_argument.
SuiteResult run_suite(const std::string& id, std::optional<double> tolerance_override = std::nullopt);

}  // namespace lwf::verify
