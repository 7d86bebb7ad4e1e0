#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mpc/complexity.hpp"
#include "mpc/omega.hpp"
#include "mpc/pattern.hpp"
#include "mpc/types.hpp"

namespace mpc {

// A pattern built by repeated return-time scanning, together with the bounds
// that attest each extension step.  `offsets` holds N_0 < ... < N_d where
// d = depth(); when `exhausted` is set the scan for the next offset failed
// within the horizon and the pattern is partial.
struct StarPattern {
  std::vector<std::uint32_t> offsets;
  std::uint32_t requested_depth = 0;
  bool exhausted = false;

  struct Attestation {
    std::uint32_t level = 0;        // which extension step this bound covers
    std::uint64_t bound = 0;        // agreement range scanned for the return
    std::uint64_t distinct_words = 0;
  };
  std::vector<Attestation> attestations;
  std::uint64_t failing_bound = 0;  // bound at which the scan exhausted

  std::uint32_t depth() const {
    return offsets.empty() ? 0 : static_cast<std::uint32_t>(offsets.size()) - 1;
  }
  Pattern pattern() const { return Pattern(offsets); }
};

// Grows a pattern to the requested depth.  Starting from N_0 = first_offset,
// each step observes the distinct projections over the first obs_positions
// shifts, takes the agreement bound L = (largest first-witness) + max offset,
// and scans for the smallest N beyond the last offset with
// prefix[i] == prefix[i + N] for all i <= L.  A failed scan within `horizon`
// marks the result exhausted at its achieved depth.
StarPattern star_pattern_construct(const FiniteWord& prefix, int depth,
                                   std::uint64_t horizon,
                                   std::uint64_t obs_positions = 500,
                                   std::uint32_t first_offset = 0);
StarPattern star_pattern_construct(const WordSpec& word, int depth,
                                   std::uint64_t horizon,
                                   std::uint64_t obs_positions = 500,
                                   std::uint32_t first_offset = 0);

struct StarVerdict {
  bool passes = true;
  std::uint64_t i_max = 0, n_shifts = 0;
  std::uint64_t failing_i = 0;      // first failure, if any
  std::uint32_t failing_level = 0;
  FiniteWord failing_word;
  std::uint64_t checked = 0;
};

// For each shift i <= i_max and each level j <= depth, the word made of the
// first j projected letters at i followed by the level-j letter repeated to
// full pattern length must appear among the sampled projections
// { prefix[n + S] : n < n_shifts }.  Subsets of a passing pattern pass at the
// same bounds, so this doubles as the heredity test hook.
StarVerdict star_condition_check(const FiniteWord& prefix, const Pattern& s,
                                 std::uint64_t i_max, std::uint64_t n_shifts);

struct RefinementResult {
  Pattern refined;                 // subset of the input pattern's offsets
  std::size_t achieved_m = 0;      // |refined|
  int achieved_level = 0;          // uniform for all equal sizes <= this
  bool budget_exhausted = false;
  bool target_unreachable = false; // no monochromatic subset of target size
  int shortfall_level = 0;         // level at which the target failed
  std::uint64_t colorings = 0;     // set serializations performed
};

// Successively refines the index set of `s`: at each level j = 1..k, every
// j-subset of the surviving offsets is colored by the sorted member list of
// the sample restricted to it, and the largest subset whose j-subsets are
// monochromatic is extracted by depth-first growth with backtracking.  The
// budget caps the number of colorings; shortfalls are reported, never padded.
RefinementResult ramsey_refine(const OmegaSample& om, const Pattern& s, int k,
                               std::size_t target_m, std::uint64_t budget);

struct SuperstationaryVerdict {
  bool passes = true;
  int level = 0;       // highest size fully verified
  Pattern first, second;  // violating pair of equal-size column patterns
};

// Exhaustively compares the restricted sets over all pairs of equal-size
// column patterns of sizes 1..k drawn from positions {0, ..., window-1}.
SuperstationaryVerdict superstationary_check(const OmegaSample& om, int k);

struct ClosureVerdict {
  bool passes = true;
  std::size_t failing_member = 0;
  std::size_t failing_i = 0;
  FiniteWord failing_word;
  std::uint64_t checked = 0;
};

// Checks that every truncated extension w(0)...w(i-1) w(i)^{L-i} of every
// member is itself a member.  Boundary shortfalls are reported as failures.
ClosureVerdict closure_condition_check(const OmegaSample& om);

struct LowerBoundReport {
  int r = 0, k = 0;
  std::set<std::pair<Letter, Letter>> f_edges;  // undirected, stored a < b
  bool f_connected = false;
  std::uint64_t parikh_count = 0;  // distinct Parikh vectors on the first k columns
  std::uint64_t bound = 0;         // (r - 1) * k + 1
  bool bound_met = false;
};

// On a refined sample: the F-graph has an edge {a, b} whenever a^k b^(L-k)
// or b^k a^(L-k) is a member; connectivity is over all r letters.  The
// Parikh count is taken over the first k columns.  When
// use_extension_closure is set the sample is closed under the extension rule
// first.
LowerBoundReport lower_bound_mechanics(const OmegaSample& om, int r, int k,
                                       bool use_extension_closure = true);

}  // namespace mpc
