#include <algorithm>
#include <set>
#include <string>

#include "mpc/complexity.hpp"

// Reference engine kept deliberately simple: textual S-factors collected in
// ordered string sets, patterns enumerated by walking subsets directly.  It
// shares no code with the packed sweep it cross-checks.

namespace mpc {

namespace {

std::string sorted_letters(const std::string& s) {
  std::string t(s);
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::uint64_t naive_pattern_complexity(const FiniteWord& prefix, int r,
                                       const Pattern& s, std::uint64_t N,
                                       Mode mode) {
  if (prefix.size() < N + s.max() + 1) throw InsufficientPrefix();
  (void)r;
  std::set<std::string> seen;
  for (std::uint64_t n = 0; n <= N; ++n) {
    std::string factor;
    for (std::uint32_t off : s) factor.push_back(static_cast<char>('0' + prefix[n + off]));
    seen.insert(mode == Mode::Plain ? factor : sorted_letters(factor));
  }
  return seen.size();
}

std::pair<std::uint64_t, Pattern> naive_max_pattern_search(const FiniteWord& prefix,
                                                           int r, int k,
                                                           std::uint32_t W,
                                                           std::uint64_t N,
                                                           Mode mode) {
  std::uint64_t best = 0;
  Pattern witness;
  enumerate_patterns(PatternWindow{W, static_cast<std::uint32_t>(k)},
                     [&](const Pattern& s) {
                       std::uint64_t v = naive_pattern_complexity(prefix, r, s, N, mode);
                       if (v > best) {
                         best = v;
                         witness = s;
                       }
                     });
  return {best, witness};
}

}  // namespace mpc
