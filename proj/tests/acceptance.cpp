// One line per acceptance criterion; exits non-zero if any of them fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "crystnet/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failed = 0;
  for (int k = 1; k <= crystnet::kCriterionCount; ++k) {
    auto start = std::chrono::steady_clock::now();
    crystnet::CheckResult r = crystnet::run_criterion(k, seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d: %s (%s, %.2fs)\n", r.passed ? "PASS" : "FAIL", k, r.name.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %d criteria passed\n", crystnet::kCriterionCount - failed, crystnet::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
