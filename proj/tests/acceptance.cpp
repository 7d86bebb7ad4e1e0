// Runs every verification suite and prints one line per criterion.
// Exit status is 0 only if all pass.

#include <chrono>
#include <cstdio>

#include "mpc/suites.hpp"

int main() {
  const auto names = mpc::suite_names();
  bool all_passed = true;
  int idx = 0;
  for (const auto& name : names) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    mpc::SuiteResult sr = mpc::run_suite(name);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = sr.passed();
    all_passed = all_passed && ok;
    std::printf("[%s] criterion %2d: %-22s (%lld ms)\n", ok ? "PASS" : "FAIL",
                idx, name.c_str(), static_cast<long long>(ms));
    if (!ok) {
      for (const auto& c : sr.checks)
        if (!c.passed)
          std::printf("       %s: expected %s, observed %s\n", c.name.c_str(),
                      c.expected.c_str(), c.observed.c_str());
    }
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
