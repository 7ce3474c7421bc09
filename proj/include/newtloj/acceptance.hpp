#pragma once

// The acceptance suite: eight criteria with pinned expected values and
// runtime limits, shared by `newtloj selftest` and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

namespace newtloj {

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  bool quick = false;   // fixed fixtures only (criteria 1-5)
  bool mutate = false;  // negative control: corrupts an expected-value constant
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "criterion 3 PASS  0.012s / 1s  <title>: <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace newtloj
