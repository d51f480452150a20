#pragma once

#include <cstdint>

#include "braid.hpp"
#include "braiding.hpp"
#include "report.hpp"

namespace mcgb {

/// Unit axiom: a braiding with an empty factor is the identity (an empty
/// factor contributes no local braidings).
[[nodiscard]] CheckResult check_unit_axiom(int r);

/// Hexagon for a composite front block:
/// beta(r+s, t) = (1_r x beta(s,t)) then (beta(r,t) x 1_s).
[[nodiscard]] CheckResult check_hexagon_b(int r, int s, int t);

/// Hexagon for a composite rear block:
/// beta(r, s+t) = (beta(r,s) x 1_t) then (1_s x beta(r,t)).
[[nodiscard]] CheckResult check_hexagon_c(int r, int s, int t);

/// Both hexagon composites braid three blocks the same way:
/// (1_r x beta(s,t))(beta(r,t) x 1_s)(1_t x beta(r,s)) =
/// (beta(r,s) x 1_t)(1_s x beta(r,t))(beta(s,t) x 1_r).
[[nodiscard]] CheckResult check_yang_baxter(int r, int s, int t);

/// Naturality: (f x h) then beta(r,s) = beta(r,s) then (h x f).
[[nodiscard]] CheckResult check_naturality(int r, int s, const MappingClass& f,
                                           const MappingClass& h,
                                           const std::string& f_label,
                                           const std::string& h_label);

struct SuiteConfig {
  int max_genus = 5;       // generator and braid-relation sweeps
  int max_rs = 6;          // r+s bound for block braidings
  int max_rst = 6;         // r+s+t bound for the axiom triples
  int max_naturality = 4;  // r+s bound for naturality samples
  int max_strands = 3;     // injectivity smoke
  int max_braid_len = 6;   // injectivity smoke
  std::uint64_t seed = 0x6d636762;
  int random_words = 12;  // sample count per randomized law check
  bool inject_fault = false;  // test-only: corrupt one braiding fixture
  std::string filter;         // keep only checks whose name starts with this
};

/// Runs the whole verification catalog. Deterministic for a fixed config:
/// checks are emitted in a fixed order and sorted by name and parameters.
/// Failures are recorded in the report, never thrown.
[[nodiscard]] Report run_suite(const SuiteConfig& config = {});

}  // namespace mcgb
