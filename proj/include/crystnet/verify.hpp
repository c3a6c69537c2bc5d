#pragma once

// Verification suites shared by the command line and the acceptance test.
// Every criterion is a deterministic function of the seed.

#include <cstdint>
#include <string>
#include <vector>

#include "crystnet/io.hpp"

namespace crystnet {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

inline constexpr int kCriterionCount = 12;

/// Criterion k in 1..12; exceptions are caught and reported as failures.
CheckResult run_criterion(int k, std::uint64_t seed = 0);

/// jacobian, homology, nets, frames, arithmetic, heights, all.
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);

/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed = 0);

Json to_json(const SuiteReport& report);

}  // namespace crystnet
