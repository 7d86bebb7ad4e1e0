#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpc/omega.hpp"
#include "mpc/ramsey.hpp"

namespace mpc {

struct CheckLine {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Named verification suites, one per headline numeric claim.
std::vector<std::string> suite_names();

// Runs a suite; seed feeds the randomized cross-check suites, workers the
// sweep engine.  Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, int workers = 1,
                      std::uint64_t seed = 0);

// The refinement pipeline on the Fibonacci rotation word, shared by the
// pipeline and lower-bound suites so both talk about the same sample.
struct RefinedSturmianSample {
  StarPattern star;
  OmegaSample sample;
  RefinementResult refinement;
  OmegaSample refined;
};
RefinedSturmianSample refined_sturmian_sample();

}  // namespace mpc
