#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcgb {

/// Outcome of one verification check. `witness` is set exactly when the
/// check failed and localises the disagreement (generator plus both image
/// words). Informational data for passing checks goes in `params`.
struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  std::optional<std::string> witness;
  /// Self-contained statement of the identity under test.
  std::string claim;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t total() const { return checks.size(); }
  [[nodiscard]] std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
  [[nodiscard]] bool all_passed() const { return failures() == 0; }

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

/// One line per check: `ok`/`FAIL`, name, params, claim, witness on failure.
[[nodiscard]] std::string render_text(const Report& r);

/// Machine-readable rendering: a JSON header line followed by one JSON
/// object per check, in stable order.
[[nodiscard]] std::string render_structured(const Report& r);

}  // namespace mcgb
