#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  ///< one line per executed check
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1-based). Exceptions inside a check are
/// recorded as failures of that check.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS <id> <title>" or "FAIL <id> <title>", followed by indented details when verbose.
std::string format_criterion(const CriterionResult& r, bool verbose);

}  // namespace asg
