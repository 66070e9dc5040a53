#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lattol {

struct ReportCheck {
  std::string name;
  bool passed = false;
  /// Optional human-readable explanation when the check failed.
  std::string detail;
  /// Offending label pairs, when the failure has pair witnesses.
  std::vector<std::pair<std::string, std::string>> witnesses;
};

/// Outcome of a theorem verification run: a list of named checks, passing
/// overall iff every check passes.
struct VerificationReport {
  std::string subject;
  /// Extra context for the summary line, e.g. "|K| = 4".
  std::string note;
  std::vector<ReportCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  const ReportCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }
};

}  // namespace lattol
