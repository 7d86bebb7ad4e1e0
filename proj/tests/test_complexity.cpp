#include <doctest.h>

#include <random>

#include "mpc/complexity.hpp"

using namespace mpc;

namespace {

FiniteWord random_word(std::mt19937_64& rng, int r, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, r - 1);
  FiniteWord w(len);
  for (auto& a : w) a = static_cast<Letter>(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("parikh vectors") {
  ParikhVector v = parikh(word_from_string("2002"), 3);
  CHECK(v.counts == std::vector<std::uint32_t>{2, 0, 2});
  CHECK(v.total() == 4);
  CHECK(v.to_string() == "(2,0,2)");
  CHECK_THROWS(parikh(word_from_string("3"), 3));
}

TEST_CASE("s-factor sets on a short word") {
  FiniteWord pre = word_from_string("01011010101");
  SFactorSet plain = s_factor_set(pre, 2, Pattern({0, 2}), 5, Mode::Plain);
  CHECK(plain.size() == pattern_complexity(pre, 2, Pattern({0, 2}), 5, Mode::Plain));
  // first witness positions are minimal
  for (std::size_t i = 0; i < plain.words.size(); ++i) {
    std::uint64_t wit = plain.witnesses[i];
    FiniteWord at = {pre[wit], pre[wit + 2]};
    CHECK(at == plain.words[i]);
  }
  SFactorSet ab = s_factor_set(pre, 2, Pattern({0, 2}), 5, Mode::Abelian);
  CHECK(ab.size() <= plain.size());
}

TEST_CASE("abelian complexity never exceeds plain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteWord pre = random_word(rng, 3, 80);
    Pattern p({0, 3, 7});
    CHECK(pattern_complexity(pre, 3, p, 70, Mode::Abelian) <=
          pattern_complexity(pre, 3, p, 70, Mode::Plain));
  }
}

TEST_CASE("complexity is monotone in the position range") {
  std::mt19937_64 rng(11);
  FiniteWord pre = random_word(rng, 2, 200);
  Pattern p({0, 2, 5});
  std::uint64_t last = 0;
  for (std::uint64_t N = 10; N <= 190; N += 30) {
    std::uint64_t v = pattern_complexity(pre, 2, p, N, Mode::Plain);
    CHECK(v >= last);
    last = v;
  }
}

TEST_CASE("insufficient prefix is rejected") {
  FiniteWord pre = word_from_string("0101");
  CHECK_THROWS_AS(pattern_complexity(pre, 2, Pattern({0, 2}), 5, Mode::Plain),
                  InsufficientPrefix);
  CHECK_THROWS_AS(max_pattern_search(pre, 2, 2, 4, 5, Mode::Plain),
                  InsufficientPrefix);
}

TEST_CASE("rotation witness pattern from decreasing fractional parts") {
  RotationSpec rot = fibonacci_rotation();
  Pattern w1 = rotation_witness_pattern(rot, 1, Rat(3, 10));
  CHECK(w1.to_string() == "2");  // {2 theta} ~ 0.236
  Pattern w2 = rotation_witness_pattern(rot, 2, Rat(3, 10));
  CHECK(w2.to_string() == "2,5");  // {5 theta} ~ 0.090
  CHECK_THROWS(rotation_witness_pattern(rot, 1, Rat(1, 2)));  // above cut gap
}

TEST_CASE("sweep and oracle agree on random words") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> rd(2, 4), kd(1, 3);
    int r = rd(rng), k = kd(rng);
    std::uint32_t W = 8;
    std::uint64_t N = 60;
    FiniteWord pre = random_word(rng, r, N + W);
    for (Mode mode : {Mode::Plain, Mode::Abelian}) {
      ComplexityReport rep = max_pattern_search(pre, r, k, W, N, mode);
      auto [value, witness] = naive_max_pattern_search(pre, r, k, W, N, mode);
      CHECK(rep.value == value);
      CHECK(rep.witness == witness);
      CHECK(rep.patterns_examined == binomial(W - 1, k - 1));
    }
  }
}

TEST_CASE("multi-worker search matches single worker") {
  std::mt19937_64 rng(31);
  FiniteWord pre = random_word(rng, 3, 150);
  SearchOptions one, four;
  one.workers = 1;
  four.workers = 4;
  for (Mode mode : {Mode::Plain, Mode::Abelian}) {
    ComplexityReport a = max_pattern_search(pre, 3, 3, 10, 100, mode, one);
    ComplexityReport b = max_pattern_search(pre, 3, 3, 10, 100, mode, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.patterns_examined == b.patterns_examined);
  }
}

TEST_CASE("ceiling and budget reporting") {
  FiniteWord pre = word_from_string("0110100110010110010110100110100");
  SearchOptions opts;
  opts.ceiling = 2;
  ComplexityReport rep = max_pattern_search(pre, 2, 2, 6, 20, Mode::Plain, opts);
  CHECK(rep.ceiling_exceeded);  // plain 2-pattern complexity exceeds 2 here

  SearchOptions budget;
  budget.max_patterns = 2;
  ComplexityReport b = max_pattern_search(pre, 2, 2, 6, 20, Mode::Plain, budget);
  CHECK(b.budget_exhausted);
  CHECK(b.patterns_examined <= 2);

  ComplexityReport full = max_pattern_search(pre, 2, 2, 6, 20, Mode::Plain);
  CHECK(!full.budget_exhausted);
  CHECK(full.status == "lower-bound-certified");
}

TEST_CASE("binary abelian searches never exceed k+1") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    FiniteWord pre = random_word(rng, 2, 120);
    for (int k = 1; k <= 3; ++k) {
      ComplexityReport rep = max_pattern_search(pre, 2, k, 10, 100, Mode::Abelian);
      CHECK(rep.value <= static_cast<std::uint64_t>(k) + 1);
    }
  }
}
