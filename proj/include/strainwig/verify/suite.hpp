#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strainwig/verify/moyal_verifier.hpp"

namespace strainwig::verify {

enum class VerifyLevel { Quick, Full };

VerifyLevel parse_level(const std::string& text);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  /// Reported but never counted as a failure.
  bool informational = false;
  /// The check threw instead of producing a measurement.
  bool errored = false;
};

struct VerifyReport {
  std::string level;
  std::vector<CheckResult> checks;
  std::vector<StarGenvalueReport> star_reports;
  double seconds = 0.0;

  bool passed() const;
  int failures() const;
  nlohmann::json to_json() const;
};

nlohmann::json to_json(const StarGenvalueReport& r);

/// Runs every module's invariant checks.
VerifyReport run_verify(VerifyLevel level);

}  // namespace strainwig::verify
