#include "mpc/complexity.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace mpc {

std::string mode_name(Mode m) { return m == Mode::Plain ? "plain" : "abelian"; }

Mode parse_mode(std::string_view s) {
  if (s == "plain") return Mode::Plain;
  if (s == "abelian") return Mode::Abelian;
  throw std::invalid_argument("mode must be plain or abelian");
}

std::uint32_t ParikhVector::total() const {
  std::uint32_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::string ParikhVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(counts[i]);
  }
  s.push_back(')');
  return s;
}

ParikhVector parikh(const FiniteWord& u, int r) {
  ParikhVector v;
  v.counts.assign(static_cast<std::size_t>(r), 0);
  for (Letter a : u) {
    if (a >= r) throw std::invalid_argument("letter outside alphabet");
    ++v.counts[a];
  }
  return v;
}

SFactorSet s_factor_set(const FiniteWord& prefix, int r, const Pattern& s,
                        std::uint64_t N, Mode mode) {
  if (s.empty()) throw std::invalid_argument("empty pattern");
  if (prefix.size() < N + s.max() + 1) throw InsufficientPrefix();
  SFactorSet out;
  out.pattern = s;
  out.positions = N;
  out.mode = mode;
  if (mode == Mode::Plain) {
    std::map<FiniteWord, std::uint64_t> seen;
    FiniteWord w(s.size());
    for (std::uint64_t n = 0; n <= N; ++n) {
      for (std::size_t i = 0; i < s.size(); ++i) w[i] = prefix[n + s[i]];
      seen.emplace(w, n);
    }
    for (auto& [w2, wit] : seen) {
      out.words.push_back(w2);
      out.witnesses.push_back(wit);
    }
  } else {
    std::map<ParikhVector, std::uint64_t> seen;
    FiniteWord w(s.size());
    for (std::uint64_t n = 0; n <= N; ++n) {
      for (std::size_t i = 0; i < s.size(); ++i) w[i] = prefix[n + s[i]];
      seen.emplace(parikh(w, r), n);
    }
    for (auto& [v, wit] : seen) {
      out.vectors.push_back(v);
      out.witnesses.push_back(wit);
    }
  }
  return out;
}

SFactorSet s_factor_set(const WordSpec& word, const Pattern& s, std::uint64_t N,
                        Mode mode) {
  FiniteWord pre = prefix(word, N + s.max() + 1);
  return s_factor_set(pre, alphabet_size(word), s, N, mode);
}

std::uint64_t pattern_complexity(const FiniteWord& prefix, int r, const Pattern& s,
                                 std::uint64_t N, Mode mode) {
  std::uint64_t value = s_factor_set(prefix, r, s, N, mode).size();
  if (mode == Mode::Abelian) {
    std::uint64_t plain = s_factor_set(prefix, r, s, N, Mode::Plain).size();
    if (value > plain)
      throw std::logic_error("abelian pattern complexity exceeded plain");
  }
  return value;
}

std::uint64_t pattern_complexity(const WordSpec& word, const Pattern& s,
                                 std::uint64_t N, Mode mode) {
  FiniteWord pre = prefix(word, N + s.max() + 1);
  return pattern_complexity(pre, alphabet_size(word), s, N, mode);
}

SFactorSet omega_pattern_set(const OmegaSample& om, const Pattern& s, Mode mode,
                             int r) {
  if (s.empty()) throw std::invalid_argument("empty pattern");
  if (s.max() >= om.window) throw std::invalid_argument("pattern exceeds window");
  SFactorSet out;
  out.pattern = s;
  out.positions = om.members.size();
  out.mode = mode;
  if (mode == Mode::Plain) {
    std::map<FiniteWord, std::uint64_t> seen;
    for (std::size_t m = 0; m < om.members.size(); ++m) {
      FiniteWord w(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) w[i] = om.members[m][s[i]];
      seen.emplace(std::move(w), m);
    }
    for (auto& [w, wit] : seen) {
      out.words.push_back(w);
      out.witnesses.push_back(wit);
    }
  } else {
    std::map<ParikhVector, std::uint64_t> seen;
    for (std::size_t m = 0; m < om.members.size(); ++m) {
      FiniteWord w(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) w[i] = om.members[m][s[i]];
      seen.emplace(parikh(w, r), m);
    }
    for (auto& [v, wit] : seen) {
      out.vectors.push_back(v);
      out.witnesses.push_back(wit);
    }
  }
  return out;
}

std::uint64_t omega_pattern_complexity(const OmegaSample& om, const Pattern& s,
                                       Mode mode, int r) {
  return omega_pattern_set(om, s, mode, r).size();
}

Pattern rotation_witness_pattern(const RotationSpec& spec, int k, const Rat& eps,
                                 std::uint64_t horizon) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  // eps must be smaller than every cut gap.
  const auto& cuts = spec.cuts();
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (spec.sign(cuts[i + 1].a - cuts[i].a - eps, cuts[i + 1].b - cuts[i].b) <= 0)
      throw std::invalid_argument("epsilon must be below the smallest cut gap");
  }
  std::vector<std::uint32_t> offs;
  // Current strict upper bound {prev} as a linear form A + B*theta; initially
  // eps itself.
  Rat boundA = eps, boundB = 0;
  for (std::uint64_t n = 1; n <= horizon && offs.size() < static_cast<std::size_t>(k); ++n) {
    BigInt f = spec.floor_n_theta(n);
    Rat A = -Rat(f), B = n;  // {n theta}
    if (spec.sign(A - boundA, B - boundB) < 0) {
      offs.push_back(static_cast<std::uint32_t>(n));
      boundA = A;
      boundB = B;
    }
  }
  if (offs.size() < static_cast<std::size_t>(k))
    throw HorizonExceeded("horizon exhausted before k offsets found");
  return Pattern(std::move(offs));
}

}  // namespace mpc
