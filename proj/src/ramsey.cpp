#include "mpc/ramsey.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace mpc {

StarPattern star_pattern_construct(const FiniteWord& prefix, int depth,
                                   std::uint64_t horizon,
                                   std::uint64_t obs_positions,
                                   std::uint32_t first_offset) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  StarPattern sp;
  sp.requested_depth = static_cast<std::uint32_t>(depth);
  sp.offsets.push_back(first_offset);
  for (int level = 1; level <= depth; ++level) {
    const std::uint32_t last = sp.offsets.back();
    if (prefix.size() <= last) throw InsufficientPrefix();
    // Observe the distinct projections of the current pattern and record the
    // largest first-witness position.
    std::uint64_t npos = std::min<std::uint64_t>(obs_positions, prefix.size() - 1 - last);
    std::map<FiniteWord, std::uint64_t> seen;
    FiniteWord w(sp.offsets.size());
    for (std::uint64_t n = 0; n <= npos; ++n) {
      for (std::size_t t = 0; t < sp.offsets.size(); ++t)
        w[t] = prefix[n + sp.offsets[t]];
      seen.emplace(w, n);
    }
    std::uint64_t max_wit = 0;
    for (const auto& [word, wit] : seen) max_wit = std::max(max_wit, wit);
    const std::uint64_t L = max_wit + last;
    sp.attestations.push_back({static_cast<std::uint32_t>(level), L, seen.size()});

    bool found = false;
    for (std::uint64_t N = last + 1; N <= horizon; ++N) {
      if (prefix.size() < L + N + 1) throw InsufficientPrefix();
      bool ok = true;
      for (std::uint64_t i = 0; i <= L && ok; ++i)
        ok = prefix[i] == prefix[i + N];
      if (ok) {
        sp.offsets.push_back(static_cast<std::uint32_t>(N));
        found = true;
        break;
      }
    }
    if (!found) {
      sp.exhausted = true;
      sp.failing_bound = L;
      break;
    }
  }
  return sp;
}

StarPattern star_pattern_construct(const WordSpec& word, int depth,
                                   std::uint64_t horizon,
                                   std::uint64_t obs_positions,
                                   std::uint32_t first_offset) {
  // Generous prefix: every agreement scan stays within horizon + bound.
  std::uint64_t need = 2 * horizon + obs_positions + first_offset + 2;
  return star_pattern_construct(prefix(word, need), depth, horizon,
                                obs_positions, first_offset);
}

StarVerdict star_condition_check(const FiniteWord& prefix, const Pattern& s,
                                 std::uint64_t i_max, std::uint64_t n_shifts) {
  if (s.empty()) throw std::invalid_argument("empty pattern");
  if (n_shifts == 0 || prefix.size() < i_max + s.max() + 1 ||
      prefix.size() < n_shifts + s.max())
    throw InsufficientPrefix();
  const std::size_t k = s.size();
  std::set<FiniteWord> sampled;
  {
    FiniteWord w(k);
    for (std::uint64_t n = 0; n < n_shifts; ++n) {
      for (std::size_t t = 0; t < k; ++t) w[t] = prefix[n + s[t]];
      sampled.insert(w);
    }
  }
  StarVerdict v;
  v.i_max = i_max;
  v.n_shifts = n_shifts;
  for (std::uint64_t i = 0; i <= i_max; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      FiniteWord w(k);
      for (std::size_t t = 0; t < j; ++t) w[t] = prefix[i + s[t]];
      for (std::size_t t = j; t < k; ++t) w[t] = prefix[i + s[j]];
      ++v.checked;
      if (!sampled.count(w)) {
        v.passes = false;
        v.failing_i = i;
        v.failing_level = static_cast<std::uint32_t>(j);
        v.failing_word = std::move(w);
        return v;
      }
    }
  }
  return v;
}

namespace {

// Canonical color of the sample restricted to the given offset subset:
// the sorted list of restricted members, serialized.
std::string subset_color(const OmegaSample& om, const std::vector<std::uint32_t>& offs,
                         std::uint64_t& colorings) {
  ++colorings;
  std::set<FiniteWord> words;
  FiniteWord w(offs.size());
  for (const auto& m : om.members) {
    for (std::size_t t = 0; t < offs.size(); ++t) w[t] = m[offs[t]];
    words.insert(w);
  }
  std::string key;
  for (const auto& word : words) {
    key.append(reinterpret_cast<const char*>(word.data()), word.size());
    key.push_back('|');
  }
  return key;
}

struct LevelSearch {
  const OmegaSample& om;
  const std::vector<std::uint32_t>& candidates;  // surviving offsets
  std::size_t j = 0;                             // subset size being colored
  std::uint64_t budget = 0;
  std::uint64_t& colorings;
  std::map<std::vector<std::uint32_t>, std::string> memo;
  std::vector<std::uint32_t> best;
  bool exhausted = false;

  const std::string& color_of(const std::vector<std::uint32_t>& key) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(key, subset_color(om, key, colorings)).first->second;
  }

  // Every j-subset of chosen+{cand} containing cand must match ref_color.
  bool compatible(const std::vector<std::uint32_t>& chosen, std::uint32_t cand,
                  const std::string& ref_color) {
    const std::size_t n = chosen.size(), need = j - 1;
    std::vector<std::size_t> idx(need);
    for (std::size_t t = 0; t < need; ++t) idx[t] = t;
    std::vector<std::uint32_t> sub(j);
    sub[need] = cand;
    while (true) {
      for (std::size_t t = 0; t < need; ++t) sub[t] = chosen[idx[t]];
      if (colorings >= budget) {
        exhausted = true;
        return false;
      }
      if (color_of(sub) != ref_color) return false;
      // next (need)-combination of {0, ..., n-1}
      std::size_t t = need;
      while (t > 0 && idx[t - 1] == n - need + t - 1) --t;
      if (t == 0) return true;
      ++idx[t - 1];
      for (std::size_t u = t; u < need; ++u) idx[u] = idx[u - 1] + 1;
    }
  }

  void dfs(std::vector<std::uint32_t>& chosen, std::size_t next,
           std::string ref_color) {
    if (chosen.size() > best.size()) best = chosen;
    if (exhausted) return;
    for (std::size_t c = next; c < candidates.size(); ++c) {
      std::uint32_t cand = candidates[c];
      std::string color = ref_color;
      if (chosen.size() + 1 >= j) {
        if (chosen.size() + 1 == j) {
          // first full subset fixes the color for this branch
          std::vector<std::uint32_t> sub(chosen);
          sub.push_back(cand);
          if (colorings >= budget) {
            exhausted = true;
            return;
          }
          color = color_of(sub);
        } else if (!compatible(chosen, cand, ref_color)) {
          if (exhausted) return;
          continue;
        }
      }
      chosen.push_back(cand);
      dfs(chosen, c + 1, color);
      chosen.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

RefinementResult ramsey_refine(const OmegaSample& om, const Pattern& s, int k,
                               std::size_t target_m, std::uint64_t budget) {
  if (s.empty()) throw std::invalid_argument("empty pattern");
  if (s.max() >= om.window) throw std::invalid_argument("pattern exceeds window");
  if (s.size() < target_m)
    throw std::invalid_argument("target size exceeds pattern size");
  if (k < 1) throw std::invalid_argument("k must be positive");

  RefinementResult res;
  std::vector<std::uint32_t> current(s.begin(), s.end());
  for (int level = 1; level <= k; ++level) {
    if (current.size() < static_cast<std::size_t>(level)) break;
    LevelSearch search{om, current, static_cast<std::size_t>(level), budget,
                       res.colorings};
    std::vector<std::uint32_t> chosen;
    search.dfs(chosen, 0, std::string());
    if (search.exhausted) res.budget_exhausted = true;
    if (search.best.size() < target_m) {
      res.target_unreachable = !res.budget_exhausted;
      res.shortfall_level = level;
      if (search.best.size() >= static_cast<std::size_t>(level)) {
        current = search.best;  // monochromatic at this level, just small
        res.achieved_level = level;
      }
      break;
    }
    current = search.best;
    res.achieved_level = level;
  }
  res.refined = Pattern(current);
  res.achieved_m = current.size();
  return res;
}

SuperstationaryVerdict superstationary_check(const OmegaSample& om, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > om.window)
    throw std::invalid_argument("k out of range for window");
  SuperstationaryVerdict v;
  Pattern all = Pattern::block(om.window);
  for (int j = 1; j <= k; ++j) {
    std::optional<std::set<FiniteWord>> ref;
    Pattern ref_pattern;
    bool violated = false;
    sub_patterns(all, static_cast<std::size_t>(j), [&](const Pattern& p) {
      if (violated) return;
      std::set<FiniteWord> words;
      FiniteWord w(p.size());
      for (const auto& m : om.members) {
        for (std::size_t t = 0; t < p.size(); ++t) w[t] = m[p[t]];
        words.insert(w);
      }
      if (!ref) {
        ref = std::move(words);
        ref_pattern = p;
      } else if (words != *ref) {
        violated = true;
        v.passes = false;
        v.first = ref_pattern;
        v.second = p;
      }
    });
    if (violated) return v;
    v.level = j;
  }
  return v;
}

ClosureVerdict closure_condition_check(const OmegaSample& om) {
  ClosureVerdict v;
  const std::size_t L = om.window;
  for (std::size_t m = 0; m < om.members.size(); ++m) {
    const auto& w = om.members[m];
    for (std::size_t i = 0; i < L; ++i) {
      FiniteWord ext(w.begin(), w.begin() + i);
      ext.resize(L, w[i]);
      ++v.checked;
      if (!om.contains(ext)) {
        v.passes = false;
        v.failing_member = m;
        v.failing_i = i;
        v.failing_word = std::move(ext);
        return v;
      }
    }
  }
  return v;
}

LowerBoundReport lower_bound_mechanics(const OmegaSample& om, int r, int k,
                                       bool use_extension_closure) {
  if (k < 1 || static_cast<std::size_t>(k) > om.window)
    throw std::invalid_argument("k out of range for window");
  if (r < 2) throw std::invalid_argument("alphabet size must be at least 2");
  const OmegaSample sample = use_extension_closure ? extension_closure(om) : om;
  LowerBoundReport rep;
  rep.r = r;
  rep.k = k;
  rep.bound = static_cast<std::uint64_t>(r - 1) * k + 1;

  const std::size_t L = sample.window;
  auto ramp = [&](Letter a, Letter b) {
    FiniteWord w(L, b);
    std::fill(w.begin(), w.begin() + k, a);
    return w;
  };
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Letter la = static_cast<Letter>(a), lb = static_cast<Letter>(b);
      if (sample.contains(ramp(la, lb)) || sample.contains(ramp(lb, la)))
        rep.f_edges.emplace(la, lb);
    }

  // connectivity over {0, ..., r-1} by union-find
  std::vector<int> parent(r);
  for (int a = 0; a < r; ++a) parent[a] = a;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : rep.f_edges) parent[find(a)] = find(b);
  rep.f_connected = true;
  for (int a = 1; a < r; ++a)
    if (find(a) != find(0)) rep.f_connected = false;

  rep.parikh_count =
      omega_pattern_complexity(sample, Pattern::block(k), Mode::Abelian, r);
  rep.bound_met = rep.parikh_count >= rep.bound;
  return rep;
}

}  // namespace mpc
