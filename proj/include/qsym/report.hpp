#pragma once

#include <string>
#include <vector>

namespace qsym {

enum class CheckStatus { Pass, Fail, Reported };

inline std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "reported";
  }
}

// One verification outcome. `params` holds human-readable key=value strings;
// `witness` carries the first counterexample (or summary data) on failure.
struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::pair<std::string, std::string>> witness;

  // A `reported` outcome never hard-fails; it records conjecture-level data.
  bool hard_ok() const { return status != CheckStatus::Fail; }
};

using ComparisonReport = CheckReport;

}  // namespace qsym
