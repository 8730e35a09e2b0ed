#pragma once

// The acceptance suite: one entry per criterion, exact arithmetic, one
// pass/fail line each and a machine-readable JSON report.  Nonzero exit is
// wired by the callers when any criterion fails.

#include <string>
#include <utility>
#include <vector>

namespace arcext {

struct SuiteConfig {
  int max_total = 6;        // oracle / Betti / bounds range: m+n <= max_total
  int assoc_max_total = 5;  // algebra sanity range
  std::vector<std::pair<int, int>> ainfty_pairs = {{1, 1}, {2, 1}, {3, 1}, {4, 1},
                                                   {5, 1}, {2, 2}, {3, 2}};
  std::vector<int> quiver_n1 = {1, 2, 3, 4, 5};  // N values, blocks (N,1)
  std::vector<std::pair<int, int>> quiver_n2 = {{2, 2}, {3, 2}};
  std::pair<int, int> stasheff_pair = {2, 2};
  int stasheff_arity = 6;
  unsigned long long seed = 12345;
  int jobs = 1;

  static SuiteConfig from_file(const std::string& path);
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json() const;
  // "criterion  1 PASS  oracle-equivalence ..." lines
  std::string to_lines() const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace arcext
