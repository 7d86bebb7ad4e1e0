#include "mpc/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mpc {

PeriodVerdict detect_eventual_period(const FiniteWord& prefix, std::uint64_t P_max,
                                     std::uint64_t Q_max) {
  const std::uint64_t L = prefix.size();
  if (P_max < 1) throw std::invalid_argument("P_max must be positive");
  if (L < Q_max + 2 * P_max) throw InsufficientPrefix();
  PeriodVerdict v;
  v.p_max = P_max;
  v.q_max = Q_max;
  v.length = L;
  for (std::uint64_t p = 1; p <= P_max; ++p) {
    // Largest i with alpha(i) != alpha(i+p); any q above it works.
    std::uint64_t bad = 0;
    bool any_bad = false;
    for (std::uint64_t i = 0; i + p < L; ++i) {
      if (prefix[i] != prefix[i + p]) {
        bad = i;
        any_bad = true;
      }
    }
    std::uint64_t q = any_bad ? bad + 1 : 0;
    if (q <= Q_max) {
      v.found = true;
      v.period = p;
      v.preperiod = q;
      return v;
    }
  }
  return v;
}

PeriodVerdict detect_eventual_period(const WordSpec& word, std::uint64_t P_max,
                                     std::uint64_t Q_max, std::uint64_t L) {
  return detect_eventual_period(prefix(word, L), P_max, Q_max);
}

ProjectionVerdict projection_verdict(const FiniteWord& pre, int r,
                                     std::uint64_t P_max, std::uint64_t Q_max) {
  if (r < 2) throw std::invalid_argument("alphabet size must be at least 2");
  ProjectionVerdict out;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    ProjectionVerdict::Entry e;
    for (int a = 0; a < r; ++a)
      if (mask & (1u << a)) e.subset.push_back(static_cast<Letter>(a));
    FiniteWord proj(pre.size());
    for (std::size_t i = 0; i < pre.size(); ++i)
      proj[i] = (mask >> pre[i]) & 1;
    e.verdict = detect_eventual_period(proj, P_max, Q_max);
    out.periodic_by_projection = out.periodic_by_projection || e.verdict.found;
    out.entries.push_back(std::move(e));
  }
  return out;
}

ProjectionVerdict projection_verdict(const WordSpec& word, std::uint64_t P_max,
                                     std::uint64_t Q_max, std::uint64_t L) {
  return projection_verdict(prefix(word, L), alphabet_size(word), P_max, Q_max);
}

RecurrenceVerdict recurrence_check(const FiniteWord& pre, std::size_t ell_max) {
  const std::size_t L = pre.size();
  if (ell_max < 1) throw std::invalid_argument("ell_max must be positive");
  if (L < 4 * ell_max) throw InsufficientPrefix();
  RecurrenceVerdict out;
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    RecurrenceVerdict::Entry e;
    e.length = ell;
    // first and second occurrence start of every factor
    std::map<FiniteWord, std::pair<std::size_t, std::optional<std::size_t>>> occ;
    for (std::size_t s = 0; s + ell <= L; ++s) {
      FiniteWord f(pre.begin() + s, pre.begin() + s + ell);
      auto it = occ.find(f);
      if (it == occ.end()) {
        occ.emplace(std::move(f), std::make_pair(s, std::nullopt));
      } else if (!it->second.second) {
        it->second.second = s;
      }
    }
    // factors whose first occurrence fits in the first half
    std::size_t first_fail = L;
    FiniteWord fail_factor;
    for (const auto& [f, pos] : occ) {
      if (pos.first + ell > L / 2) continue;
      if (!pos.second && pos.first < first_fail) {
        first_fail = pos.first;
        fail_factor = f;
      }
    }
    if (first_fail < L) {
      e.recurrent = false;
      e.failing_factor = fail_factor;
      e.factor_position = first_fail;
      out.recurrent = false;
    }
    out.per_length.push_back(std::move(e));
  }
  return out;
}

RecurrenceVerdict recurrence_check(const WordSpec& word, std::size_t ell_max,
                                   std::uint64_t L) {
  return recurrence_check(prefix(word, L), ell_max);
}

BalanceVerdict balance_check(const FiniteWord& pre, std::size_t n_max) {
  const std::size_t L = pre.size();
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (L < 2 * n_max) throw InsufficientPrefix();
  for (Letter a : pre)
    if (a > 1) throw std::invalid_argument("balance check requires a binary word");
  BalanceVerdict out;
  out.n_max = n_max;
  out.length = L;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += pre[i];
    std::size_t mn = ones, mx = ones, mn_pos = 0, mx_pos = 0;
    for (std::size_t s = 1; s + n <= L; ++s) {
      ones += pre[s + n - 1];
      ones -= pre[s - 1];
      if (ones < mn) mn = ones, mn_pos = s;
      if (ones > mx) mx = ones, mx_pos = s;
    }
    if (mx - mn >= 2) {
      out.balanced = false;
      out.violating_n = n;
      out.u.assign(pre.begin() + mx_pos, pre.begin() + mx_pos + n);
      out.v.assign(pre.begin() + mn_pos, pre.begin() + mn_pos + n);
      return out;
    }
  }
  return out;
}

BalanceVerdict balance_check(const WordSpec& word, std::size_t n_max,
                             std::uint64_t L) {
  return balance_check(prefix(word, L), n_max);
}

EdgeGraph edge_graph(const OmegaSample& om, std::size_t i, std::size_t j, int r) {
  if (i >= j) throw std::invalid_argument("edge graph requires i < j");
  if (j >= om.window) throw std::invalid_argument("pattern exceeds window");
  EdgeGraph g;
  g.r = r;
  bool adj[8][8] = {};
  for (const auto& w : om.members) {
    if (w[i] != w[j]) {
      g.edges.emplace(w[i], w[j]);
      if (w[i] < 8 && w[j] < 8) adj[w[i]][w[j]] = true;
    }
  }
  if (r > 8) throw std::invalid_argument("edge graph supports alphabets up to 8");
  // reachability closure over the full vertex set
  bool reach[8][8] = {};
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) reach[a][b] = adj[a][b] || a == b;
  for (int m = 0; m < r; ++m)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        reach[a][b] = reach[a][b] || (reach[a][m] && reach[m][b]);
  g.strongly_connected = true;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (!reach[a][b]) g.strongly_connected = false;
  return g;
}

}  // namespace mpc
