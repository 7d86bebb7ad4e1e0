#include <doctest.h>

#include <random>

#include "mpc/ramsey.hpp"
#include "mpc/suites.hpp"

using namespace mpc;

TEST_CASE("star pattern on an alternating word") {
  EventuallyPeriodicSpec alt{{}, word_from_string("01")};
  StarPattern sp = star_pattern_construct(prefix(WordSpec(alt), 200), 3, 100);
  CHECK(!sp.exhausted);
  CHECK(sp.offsets == std::vector<std::uint32_t>{0, 2, 4, 6});
}

TEST_CASE("star pattern on a constant word") {
  EventuallyPeriodicSpec zero{{}, word_from_string("0")};
  StarPattern sp = star_pattern_construct(prefix(WordSpec(zero), 100), 4, 50);
  CHECK(!sp.exhausted);
  CHECK(sp.offsets == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("star pattern exhausts on the sparse word") {
  LacunarySpec lac{LacunarySpec::Variant::PowersOfThree, 1 << 21};
  StarPattern sp = star_pattern_construct(prefix(WordSpec(lac), 40000), 2, 10000);
  CHECK(sp.exhausted);
  CHECK(sp.depth() == 1);
  CHECK(sp.offsets == std::vector<std::uint32_t>{0, 6});
  CHECK(sp.failing_bound > 0);
}

TEST_CASE("star condition holds on constructed patterns and their subsets") {
  EventuallyPeriodicSpec alt{{}, word_from_string("01")};
  FiniteWord pre = prefix(WordSpec(alt), 500);
  StarPattern sp = star_pattern_construct(pre, 3, 100);
  Pattern p = sp.pattern();
  CHECK(star_condition_check(pre, p, 100, 300).passes);

  // heredity: every subset passes at the same bounds
  for (std::size_t j = 1; j <= p.size(); ++j) {
    sub_patterns(p, j, [&](const Pattern& q) {
      CHECK(star_condition_check(pre, q, 100, 300).passes);
    });
  }
}

TEST_CASE("star condition on a constant word always passes") {
  EventuallyPeriodicSpec zero{{}, word_from_string("0")};
  FiniteWord pre = prefix(WordSpec(zero), 200);
  CHECK(star_condition_check(pre, Pattern({0, 1, 3}), 50, 100).passes);
}

TEST_CASE("refinement on constant columns takes the whole pattern") {
  OmegaSample om = make_omega_sample(
      {FiniteWord(6, 0), FiniteWord(6, 1)}, "explicit");
  RefinementResult res = ramsey_refine(om, Pattern::block(6), 3, 5, 100000);
  CHECK(!res.target_unreachable);
  CHECK(!res.budget_exhausted);
  CHECK(res.achieved_m == 6);
  CHECK(res.achieved_level == 3);
}

TEST_CASE("refinement reports unreachable targets") {
  // column 0 differs from all the others
  OmegaSample om = make_omega_sample(
      {word_from_string("2000"), word_from_string("2111")}, "explicit");
  RefinementResult res = ramsey_refine(om, Pattern::block(4), 1, 4, 100000);
  CHECK(res.target_unreachable);
  CHECK(res.shortfall_level == 1);
  CHECK(res.achieved_m < 4);
}

TEST_CASE("superstationarity of the full shift") {
  OmegaSample om = build_omega_union(2, 4, 100);  // all of {0,1}^4
  for (int k = 1; k <= 4; ++k) CHECK(superstationary_check(om, k).passes);
}

TEST_CASE("superstationarity fails when column alphabets differ") {
  OmegaSample om = make_omega_sample(
      {word_from_string("0111"), word_from_string("1111")}, "explicit");
  SuperstationaryVerdict v = superstationary_check(om, 1);
  CHECK(!v.passes);
  CHECK(v.first.size() == 1);
  CHECK(v.second.size() == 1);
}

TEST_CASE("refinement output passes the superstationary recheck") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> rd(2, 3), ld(2, 6), md(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    int r = rd(rng);
    std::size_t L = static_cast<std::size_t>(ld(rng));
    std::uniform_int_distribution<int> letter(0, r - 1);
    std::vector<FiniteWord> members;
    for (int i = 0, n = md(rng); i < n; ++i) {
      FiniteWord w(L);
      for (auto& a : w) a = static_cast<Letter>(letter(rng));
      members.push_back(std::move(w));
    }
    OmegaSample om = make_omega_sample(std::move(members), "random");
    RefinementResult res =
        ramsey_refine(om, Pattern::block(om.window), 2, 1, 100000);
    if (res.achieved_level >= 1 && res.achieved_m >= 1) {
      OmegaSample restricted = restrict_columns(om, res.refined);
      int level = std::min<int>(res.achieved_level,
                                static_cast<int>(res.achieved_m));
      CHECK(superstationary_check(restricted, level).passes);
    }
  }
}

TEST_CASE("closure condition check") {
  OmegaSample closed = extension_closure(make_omega_sample(
      {word_from_string("0011")}, "explicit"));
  CHECK(closure_condition_check(closed).passes);

  OmegaSample open = make_omega_sample({word_from_string("0011")}, "explicit");
  ClosureVerdict v = closure_condition_check(open);
  CHECK(!v.passes);
}

TEST_CASE("lower bound mechanics on the adjacent-letter union") {
  OmegaSample om = build_omega_union(3, 6, 100);
  for (int k = 2; k <= 3; ++k) {
    LowerBoundReport rep = lower_bound_mechanics(om, 3, k, false);
    CHECK(rep.f_connected);
    CHECK(rep.bound == static_cast<std::uint64_t>(2 * k + 1));
    CHECK(rep.bound_met);
  }
}

TEST_CASE("refined word sample pipeline") {
  RefinedSturmianSample rs = refined_sturmian_sample();
  CHECK(!rs.star.exhausted);
  CHECK(rs.star.depth() == 3);
  CHECK(rs.refinement.achieved_m == 4);
  CHECK(superstationary_check(rs.refined, rs.refinement.achieved_level).passes);
}
