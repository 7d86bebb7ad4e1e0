#include <doctest.h>

#include <vector>

#include "mpc/pattern.hpp"

using namespace mpc;

TEST_CASE("pattern construction and parsing") {
  Pattern p = Pattern::parse("0,2,5");
  CHECK(p.size() == 3);
  CHECK(p[0] == 0);
  CHECK(p.max() == 5);
  CHECK(p.to_string() == "0,2,5");
  CHECK_THROWS(Pattern({3, 3}));
  CHECK_THROWS(Pattern({5, 2}));
}

TEST_CASE("block and translation") {
  Pattern b = Pattern::block(4);
  CHECK(b.to_string() == "0,1,2,3");
  Pattern t = b.translated(7);
  CHECK(t.to_string() == "7,8,9,10");
  std::uint32_t shift = 0;
  CHECK(t.canonicalized(&shift) == b);
  CHECK(shift == 7);
}

TEST_CASE("canonicalization preserves gaps") {
  Pattern p({3, 8, 20});
  Pattern c = p.canonicalized();
  CHECK(c.to_string() == "0,5,17");
  for (std::size_t i = 1; i < p.size(); ++i)
    CHECK(p[i] - p[i - 1] == c[i] - c[i - 1]);
}

TEST_CASE("enumeration counts match binomials") {
  for (std::uint32_t W : {4u, 8u, 12u}) {
    for (std::uint32_t k = 1; k <= W; ++k) {
      std::uint64_t count = 0;
      Pattern prev;
      enumerate_patterns(PatternWindow{W, k}, [&](const Pattern& p) {
        CHECK(p[0] == 0);
        CHECK(p.max() < W);
        CHECK(p.size() == k);
        if (count) CHECK(prev < p);  // lexicographic order
        prev = p;
        ++count;
      });
      CHECK(count == binomial(W - 1, k - 1));
    }
  }
}

TEST_CASE("sub pattern enumeration") {
  Pattern p({0, 2, 5, 9});
  std::vector<std::string> subs;
  sub_patterns(p, 2, [&](const Pattern& q) { subs.push_back(q.to_string()); });
  CHECK(subs == std::vector<std::string>{"0,2", "0,5", "0,9", "2,5", "2,9", "5,9"});
  std::uint64_t n3 = 0;
  sub_patterns(p, 3, [&](const Pattern&) { ++n3; });
  CHECK(n3 == 4);
}

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(63, 5) == 7028847);
  CHECK(binomial(5, 7) == 0);
}
