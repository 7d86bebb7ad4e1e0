#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mpc/omega.hpp"
#include "mpc/types.hpp"
#include "mpc/word.hpp"

namespace mpc {

// Bounded structural verdicts.  Every verdict records its bounds; "none"
// outcomes mean none found up to those bounds, never a proof.

struct PeriodVerdict {
  bool found = false;
  std::uint64_t period = 0;     // minimal p, then minimal q
  std::uint64_t preperiod = 0;
  std::uint64_t p_max = 0, q_max = 0, length = 0;
};

// Scans p = 1..P_max, q = 0..Q_max over the given prefix; requires
// L >= Q_max + 2*P_max so a found period is attested over a full period
// beyond the preperiod.
PeriodVerdict detect_eventual_period(const FiniteWord& prefix, std::uint64_t P_max,
                                     std::uint64_t Q_max);
PeriodVerdict detect_eventual_period(const WordSpec& word, std::uint64_t P_max,
                                     std::uint64_t Q_max, std::uint64_t L);

struct ProjectionVerdict {
  struct Entry {
    std::vector<Letter> subset;  // B, a nonempty proper subset of the alphabet
    PeriodVerdict verdict;
  };
  std::vector<Entry> entries;  // all 2^r - 2 subsets
  bool periodic_by_projection = false;
};

ProjectionVerdict projection_verdict(const FiniteWord& prefix, int r,
                                     std::uint64_t P_max, std::uint64_t Q_max);
ProjectionVerdict projection_verdict(const WordSpec& word, std::uint64_t P_max,
                                     std::uint64_t Q_max, std::uint64_t L);

struct RecurrenceVerdict {
  struct Entry {
    std::size_t length = 0;
    bool recurrent = true;
    FiniteWord failing_factor;       // first factor with no later occurrence
    std::uint64_t factor_position = 0;
  };
  std::vector<Entry> per_length;  // ell = 1 .. ell_max
  bool recurrent = true;
};

// Every length-ell factor occurring in the first half of the prefix must
// occur again at a strictly later start position within the prefix.
// Requires L >= 4*ell_max.
RecurrenceVerdict recurrence_check(const FiniteWord& prefix, std::size_t ell_max);
RecurrenceVerdict recurrence_check(const WordSpec& word, std::size_t ell_max,
                                   std::uint64_t L);

struct BalanceVerdict {
  bool balanced = true;
  std::size_t n_max = 0, length = 0;
  std::size_t violating_n = 0;
  FiniteWord u, v;  // witnesses with |u|_1 - |v|_1 >= 2
};

// Binary words only; requires L >= 2*n_max.
BalanceVerdict balance_check(const FiniteWord& prefix, std::size_t n_max);
BalanceVerdict balance_check(const WordSpec& word, std::size_t n_max,
                             std::uint64_t L);

struct EdgeGraph {
  int r = 0;
  std::set<std::pair<Letter, Letter>> edges;  // loop-free directed edges
  bool strongly_connected = false;
};

// E_{i,j} = {(w(i), w(j)) : w in sample, w(i) != w(j)}; strong connectivity
// is decided over the full vertex set {0, ..., r-1}.
EdgeGraph edge_graph(const OmegaSample& om, std::size_t i, std::size_t j, int r);

}  // namespace mpc
