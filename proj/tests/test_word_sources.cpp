#include <doctest.h>

#include "mpc/omega.hpp"
#include "mpc/rotation.hpp"
#include "mpc/word.hpp"

using namespace mpc;

TEST_CASE("fibonacci rotation word prefix") {
  RotationSpec rot = fibonacci_rotation();
  CHECK(rot.eval(0) == 0);
  FiniteWord expect = word_from_string("01011010");
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(rot.eval(n) == expect[n]);
}

TEST_CASE("three letter rotation") {
  RotationSpec rot = rotation_three_letters();
  CHECK(rot.alphabet_size() == 3);
  CHECK(rot.eval(2) == 0);  // {2 theta} ~ 0.236 < 1/3
  FiniteWord pre = prefix(WordSpec(rot), 2000);
  for (Letter a : pre) CHECK(a < 3);
}

TEST_CASE("rotation evaluation is consistent across truncation depth") {
  RotationSpec deep = fibonacci_rotation(42);
  RotationSpec shallow = deep.truncated(24);
  for (std::uint64_t n = 0; n < 500; ++n) CHECK(deep.eval(n) == shallow.eval(n));
}

TEST_CASE("rotation rejects degenerate continued fractions") {
  CHECK_THROWS(RotationSpec({1}, {parse_cut_expr("0"), parse_cut_expr("1")}));
}

TEST_CASE("cut expressions parse") {
  CutExpr c = parse_cut_expr("1-theta");
  CHECK(c.a == 1);
  CHECK(c.b == -1);
  c = parse_cut_expr("1/3");
  CHECK(c.a == Rat(1, 3));
  CHECK(c.b == 0);
  c = parse_cut_expr("1/2+3*theta");
  CHECK(c.a == Rat(1, 2));
  CHECK(c.b == 3);
  CHECK_THROWS(parse_cut_expr("theta*theta"));
}

TEST_CASE("canonical 2-adic word values") {
  ToeplitzSpec spec = ToeplitzSpec::canonical(3);
  CHECK(spec.eval(0) == 0);  // valuation of 1 is 0
  CHECK(spec.eval(3) == 2);  // valuation of 4 is 2
  CHECK(spec.eval(7) == 0);  // valuation of 8 is 3, 3 mod 3 = 0
  CHECK(word_to_string(prefix(WordSpec(spec), 8)) == "01020100");
}

TEST_CASE("2-adic valuation positions form arithmetic progressions") {
  // positions with valuation v are exactly 2^v - 1 + k * 2^(v+1)
  ToeplitzSpec spec = ToeplitzSpec::canonical(3, 20);
  for (int v = 0; v < 5; ++v) {
    for (std::uint64_t n = 0; n < 1000; ++n) {
      bool in_progression = (n + 1) % (1ull << (v + 1)) == (1ull << v);
      bool letter_matches = spec.eval(n) == static_cast<Letter>(v % 3);
      if (in_progression) CHECK(letter_matches);
    }
  }
}

TEST_CASE("undetermined valuation is an error") {
  ToeplitzSpec spec = ToeplitzSpec::canonical(3, 3);
  // n - gamma = n + 1; valuation >= 3 is beyond the 3-bit truncation
  CHECK_THROWS_AS(spec.eval(7), ValuationUndetermined);
  CHECK_NOTHROW(spec.eval(6));
}

TEST_CASE("lacunary variants") {
  LacunarySpec p3{LacunarySpec::Variant::PowersOfThree, 100000};
  CHECK(p3.eval(3) == 1);
  CHECK(p3.eval(4) == 0);
  CHECK(p3.eval(9) == 1);
  CHECK(p3.eval(10) == 0);
  CHECK(word_to_string(prefix(WordSpec(p3), 10)) == "0001000001");

  LacunarySpec lit{LacunarySpec::Variant::LiteralConcatenation, 100000};
  CHECK(lit.eval(0) == 1);
  CHECK(lit.eval(4) == 1);
  CHECK(lit.eval(14) == 1);
  CHECK(lit.eval(42) == 1);
  CHECK(lit.eval(1) == 0);
  CHECK(lit.eval(15) == 0);
}

TEST_CASE("eventually periodic emission") {
  EventuallyPeriodicSpec s{word_from_string("1"), word_from_string("0")};
  CHECK(s.eval(0) == 1);
  for (std::uint64_t n = 1; n < 20; ++n) CHECK(s.eval(n) == 0);

  EventuallyPeriodicSpec t{{}, word_from_string("01")};
  CHECK(t.eval(5) == 1);
  FiniteWord pre = prefix(WordSpec(t), 100);
  for (std::size_t i = 0; i < 98; ++i) CHECK(pre[i] == pre[i + 2]);
}

TEST_CASE("explicit word indexing") {
  ExplicitSpec s{word_from_string("2101"), 3};
  CHECK(s.eval(2) == 0);
  CHECK_THROWS(s.eval(4));
}

TEST_CASE("omega union enumeration") {
  OmegaSample one = build_omega_union(3, 1, 100);
  CHECK(one.members.size() == 3);

  OmegaSample two = build_omega_union(3, 2, 100);
  std::vector<std::string> got;
  for (const auto& w : two.members) got.push_back(word_to_string(w));
  CHECK(got == std::vector<std::string>{"00", "01", "10", "11", "12", "21", "22"});

  OmegaSample full = build_omega_union(2, 2, 100);
  CHECK(full.members.size() == 4);

  CHECK_THROWS_AS(build_omega_union(3, 12, 100), CapExceeded);
}

TEST_CASE("word evaluation is deterministic") {
  WordSpec spec = fibonacci_rotation();
  FiniteWord a = prefix(spec, 300), b = prefix(spec, 300);
  CHECK(a == b);
}
