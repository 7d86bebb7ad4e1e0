#include "mpc/suites.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mpc/complexity.hpp"
#include "mpc/structure.hpp"
#include "mpc/word.hpp"

namespace mpc {

namespace {

void check(SuiteResult& sr, std::string name, std::string expected,
           std::string observed) {
  CheckLine line;
  line.name = std::move(name);
  line.passed = expected == observed;
  line.expected = std::move(expected);
  line.observed = std::move(observed);
  sr.checks.push_back(std::move(line));
}

void check_eq(SuiteResult& sr, std::string name, std::uint64_t expected,
              std::uint64_t observed) {
  check(sr, std::move(name), std::to_string(expected), std::to_string(observed));
}

void check_true(SuiteResult& sr, std::string name, bool observed) {
  check(sr, std::move(name), "true", observed ? "true" : "false");
}

// 1. Sturmian word: factor complexity n+1, abelian factor complexity 2.
SuiteResult suite_sturmian_char(int workers, std::uint64_t) {
  (void)workers;
  SuiteResult sr{"sturmian-char", {}};
  const std::uint64_t N = 10000;
  FiniteWord pre = prefix(fibonacci_rotation(), N + 31);
  for (int n = 1; n <= 30; ++n) {
    check_eq(sr, "p(" + std::to_string(n) + ")", n + 1,
             pattern_complexity(pre, 2, Pattern::block(n), N, Mode::Plain));
    check_eq(sr, "p_ab(" + std::to_string(n) + ")", 2,
             pattern_complexity(pre, 2, Pattern::block(n), N, Mode::Abelian));
  }
  return sr;
}

// 2. Binary words: abelian maximal pattern complexity is exactly k+1.
SuiteResult suite_binary_equality(int workers, std::uint64_t) {
  SuiteResult sr{"binary-equality", {}};
  const std::uint32_t W = 64;
  const std::uint64_t N = 5000;
  FiniteWord pre = prefix(fibonacci_rotation(), N + W);
  for (int k = 1; k <= 6; ++k) {
    SearchOptions opts;
    opts.workers = workers;
    opts.ceiling = static_cast<std::uint64_t>(k) + 1;
    ComplexityReport rep = max_pattern_search(pre, 2, k, W, N, Mode::Abelian, opts);
    check_eq(sr, "max_ab(k=" + std::to_string(k) + ")", k + 1, rep.value);
    check_true(sr, "ceiling_respected(k=" + std::to_string(k) + ")",
               !rep.ceiling_exceeded);
  }
  return sr;
}

// 3. Canonical 2-adic words over r letters: abelian max for k=2 is 2r-1,
// and every observed pair class is 2E_a or contains the pattern letter c.
SuiteResult suite_toeplitz(int workers, std::uint64_t) {
  SuiteResult sr{"toeplitz-2r-1", {}};
  const std::uint32_t W = 256;
  const std::uint64_t N = 100000;
  for (int r : {3, 4}) {
    ToeplitzSpec spec = ToeplitzSpec::canonical(r);
    FiniteWord pre = prefix(spec, N + W);
    SearchOptions opts;
    opts.workers = workers;
    ComplexityReport rep = max_pattern_search(pre, r, 2, W, N, Mode::Abelian, opts);
    check_eq(sr, "max_ab(r=" + std::to_string(r) + ",k=2)", 2 * r - 1, rep.value);

    bool shapes_ok = true;
    for (std::uint32_t t = 1; t < W && shapes_ok; ++t) {
      // valuation of the gap fixes the shared letter c
      int v = std::countr_zero(t);
      Letter c = static_cast<Letter>(v % r);
      SFactorSet set =
          s_factor_set(pre, r, Pattern({0, t}), N, Mode::Abelian);
      for (const auto& vec : set.vectors) {
        bool doubled = false;
        for (auto cnt : vec.counts) doubled = doubled || cnt == 2;
        if (!doubled && vec.counts[c] != 1) shapes_ok = false;
      }
    }
    check_true(sr, "pair_class_shape(r=" + std::to_string(r) + ")", shapes_ok);
  }
  return sr;
}

// 4. Three-letter rotation word: abelian max is exactly 3k; a witness built
// from decreasing fractional parts reaches it, the full sweep never exceeds it.
SuiteResult suite_rotation_rk(int workers, std::uint64_t) {
  SuiteResult sr{"rotation-rk", {}};
  RotationSpec rot = rotation_three_letters();
  const std::uint32_t W = 128;
  const std::uint64_t N = 100000;
  FiniteWord pre = prefix(rot, N + W);
  for (int k = 1; k <= 4; ++k) {
    Pattern wit = rotation_witness_pattern(rot, k, Rat(1, 4));
    check_eq(sr, "witness_value(k=" + std::to_string(k) + ")", 3 * k,
             pattern_complexity(pre, 3, wit, N, Mode::Abelian));
    SearchOptions opts;
    opts.workers = workers;
    opts.ceiling = static_cast<std::uint64_t>(3 * k);
    ComplexityReport rep = max_pattern_search(pre, 3, k, W, N, Mode::Abelian, opts);
    check_eq(sr, "max_ab(k=" + std::to_string(k) + ")", 3 * k, rep.value);
    check_true(sr, "ceiling_respected(k=" + std::to_string(k) + ")",
               !rep.ceiling_exceeded);
  }
  return sr;
}

// 5. Non-recurrent sparse word: abelian max for k=3 is 3, recurrence fails.
SuiteResult suite_lacunary(int workers, std::uint64_t) {
  SuiteResult sr{"lacunary-nonrecurrent", {}};
  LacunarySpec spec{LacunarySpec::Variant::PowersOfThree, 1 << 20};
  const std::uint32_t W = 100;
  const std::uint64_t N = 10000;
  FiniteWord pre = prefix(spec, N + W);
  SearchOptions opts;
  opts.workers = workers;
  ComplexityReport rep = max_pattern_search(pre, 2, 3, W, N, Mode::Abelian, opts);
  check_eq(sr, "max_ab(k=3)", 3, rep.value);
  RecurrenceVerdict rec = recurrence_check(prefix(spec, 64), 8);
  check_true(sr, "recurrence_fails", !rec.recurrent);
  return sr;
}

// 6. Eventually periodic words: plain max drops below 2k for some k <= 4.
SuiteResult suite_eventual_periodicity(int workers, std::uint64_t) {
  SuiteResult sr{"eventual-periodicity", {}};
  const std::uint32_t W = 64;
  const std::uint64_t N = 2000;
  struct Case {
    std::string name;
    EventuallyPeriodicSpec spec;
  };
  std::vector<Case> cases = {
      {"(01)^inf", {{}, word_from_string("01")}},
      {"1(001)^inf", {word_from_string("1"), word_from_string("001")}},
  };
  for (const auto& c : cases) {
    FiniteWord pre = prefix(c.spec, N + W);
    bool below = false;
    std::string values;
    for (int k = 1; k <= 4 && !below; ++k) {
      SearchOptions opts;
      opts.workers = workers;
      ComplexityReport rep = max_pattern_search(pre, 2, k, W, N, Mode::Plain, opts);
      if (!values.empty()) values += ",";
      values += std::to_string(rep.value);
      below = rep.value < 2 * static_cast<std::uint64_t>(k);
    }
    check_true(sr, "below_2k(" + c.name + ",values=" + values + ")", below);
  }
  return sr;
}

// 7. Union of adjacent-letter full shifts: abelian complexity of the length-k
// block is 2k+1 and no pattern in the window beats the block.
SuiteResult suite_omega_union(int workers, std::uint64_t) {
  (void)workers;
  SuiteResult sr{"omega-union", {}};
  const std::size_t L = 8;
  OmegaSample om = build_omega_union(3, L, 1 << 10);
  for (int k = 1; k <= 5; ++k) {
    std::uint64_t block_value =
        omega_pattern_complexity(om, Pattern::block(k), Mode::Abelian, 3);
    check_eq(sr, "block_ab(k=" + std::to_string(k) + ")", 2 * k + 1, block_value);
    std::uint64_t best = 0;
    enumerate_patterns(
        PatternWindow{static_cast<std::uint32_t>(L), static_cast<std::uint32_t>(k)},
        [&](const Pattern& p) {
          best = std::max(best, omega_pattern_complexity(om, p, Mode::Abelian, 3));
        });
    check_eq(sr, "window_max_ab(k=" + std::to_string(k) + ")", block_value, best);
  }
  return sr;
}

OmegaSample random_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rd(2, 3), ld(2, 6), md(1, 10);
  int r = rd(rng);
  std::size_t L = static_cast<std::size_t>(ld(rng));
  int m = md(rng);
  std::uniform_int_distribution<int> letter(0, r - 1);
  std::vector<FiniteWord> members;
  for (int i = 0; i < m; ++i) {
    FiniteWord w(L);
    for (auto& a : w) a = static_cast<Letter>(letter(rng));
    members.push_back(std::move(w));
  }
  return make_omega_sample(std::move(members), "random");
}

// 8. Refinement pipeline on the Fibonacci rotation word, plus the soundness
// round-trip on random samples.
SuiteResult suite_ramsey_pipeline(int workers, std::uint64_t seed) {
  (void)workers;
  SuiteResult sr{"ramsey-pipeline", {}};
  RefinedSturmianSample rs = refined_sturmian_sample();
  check_true(sr, "star_depth_3", !rs.star.exhausted && rs.star.depth() == 3);
  check_true(sr, "refine_level_2_size_4",
             rs.refinement.achieved_level == 2 && rs.refinement.achieved_m == 4 &&
                 !rs.refinement.budget_exhausted &&
                 !rs.refinement.target_unreachable);
  check_true(sr, "superstationary_level_2",
             superstationary_check(rs.refined, 2).passes);
  check_true(sr, "edge_graph_connected",
             edge_graph(rs.refined, 0, 1, 2).strongly_connected);

  std::mt19937_64 rng(seed);
  bool round_trip = true;
  for (int trial = 0; trial < 50 && round_trip; ++trial) {
    OmegaSample om = random_sample(rng);
    int k = std::min<int>(2, static_cast<int>(om.window));
    RefinementResult res =
        ramsey_refine(om, Pattern::block(om.window), k, 1, 100000);
    if (res.achieved_level >= 1 && res.achieved_m >= 1) {
      OmegaSample restricted = restrict_columns(om, res.refined);
      int level = std::min<int>(res.achieved_level,
                                static_cast<int>(res.achieved_m));
      round_trip = superstationary_check(restricted, level).passes;
    }
  }
  check_true(sr, "refinement_round_trip_50", round_trip);
  return sr;
}

// 9. Packed sweep agrees with the string-set engine on random words.
SuiteResult suite_oracle_equivalence(int workers, std::uint64_t seed) {
  SuiteResult sr{"oracle-equivalence", {}};
  std::mt19937_64 rng(seed);
  bool all_equal = true;
  std::string first_mismatch;
  for (int trial = 0; trial < 100 && all_equal; ++trial) {
    std::uniform_int_distribution<int> rd(2, 4), kd(1, 4), nd(50, 200);
    int r = rd(rng), k = kd(rng);
    std::uniform_int_distribution<int> wd(k, 12);
    std::uint32_t W = static_cast<std::uint32_t>(wd(rng));
    std::uint64_t N = static_cast<std::uint64_t>(nd(rng));
    std::uniform_int_distribution<int> letter(0, r - 1);
    FiniteWord pre(N + W);
    for (auto& a : pre) a = static_cast<Letter>(letter(rng));
    for (Mode mode : {Mode::Plain, Mode::Abelian}) {
      SearchOptions opts;
      opts.workers = workers;
      ComplexityReport rep = max_pattern_search(pre, r, k, W, N, mode, opts);
      auto [naive_value, naive_witness] =
          naive_max_pattern_search(pre, r, k, W, N, mode);
      if (rep.value != naive_value || rep.witness != naive_witness) {
        all_equal = false;
        first_mismatch = "trial " + std::to_string(trial) + " " + mode_name(mode) +
                         ": sweep " + std::to_string(rep.value) + "@" +
                         rep.witness.to_string() + " vs oracle " +
                         std::to_string(naive_value) + "@" +
                         naive_witness.to_string();
      }
    }
  }
  check(sr, "engines_agree_100", "agree",
        all_equal ? "agree" : first_mismatch);
  return sr;
}

// 10. On the refined sample: connected F-graph and at least k+1 pair classes.
SuiteResult suite_lower_bound(int workers, std::uint64_t) {
  (void)workers;
  SuiteResult sr{"lower-bound-mechanics", {}};
  RefinedSturmianSample rs = refined_sturmian_sample();
  for (int k : {2, 3}) {
    LowerBoundReport rep = lower_bound_mechanics(rs.refined, 2, k, true);
    check_true(sr, "f_connected(k=" + std::to_string(k) + ")", rep.f_connected);
    check(sr, "parikh_count(k=" + std::to_string(k) + ")",
          ">=" + std::to_string(rep.bound),
          rep.parikh_count >= rep.bound ? ">=" + std::to_string(rep.bound)
                                        : std::to_string(rep.parikh_count));
  }
  return sr;
}

}  // namespace

RefinedSturmianSample refined_sturmian_sample() {
  FiniteWord pre = prefix(fibonacci_rotation(), 20000);
  RefinedSturmianSample out;
  // The first offset is the word's first return time, so the fractional
  // parts along the pattern decrease from the start.
  out.star = star_pattern_construct(pre, 3, 10000, 500, 2);
  out.sample = sample_orbit_projections(pre, out.star.pattern(), 8000);
  out.refinement = ramsey_refine(
      out.sample, Pattern::block(out.sample.window), 2, 4, 1000000);
  out.refined = restrict_columns(out.sample, out.refinement.refined);
  return out;
}

std::vector<std::string> suite_names() {
  return {"sturmian-char",   "binary-equality", "toeplitz-2r-1",
          "rotation-rk",     "lacunary-nonrecurrent", "eventual-periodicity",
          "omega-union",     "ramsey-pipeline", "oracle-equivalence",
          "lower-bound-mechanics"};
}

SuiteResult run_suite(const std::string& name, int workers, std::uint64_t seed) {
  if (name == "sturmian-char") return suite_sturmian_char(workers, seed);
  if (name == "binary-equality") return suite_binary_equality(workers, seed);
  if (name == "toeplitz-2r-1") return suite_toeplitz(workers, seed);
  if (name == "rotation-rk") return suite_rotation_rk(workers, seed);
  if (name == "lacunary-nonrecurrent") return suite_lacunary(workers, seed);
  if (name == "eventual-periodicity") return suite_eventual_periodicity(workers, seed);
  if (name == "omega-union") return suite_omega_union(workers, seed);
  if (name == "ramsey-pipeline") return suite_ramsey_pipeline(workers, seed);
  if (name == "oracle-equivalence") return suite_oracle_equivalence(workers, seed);
  if (name == "lower-bound-mechanics") return suite_lower_bound(workers, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mpc
