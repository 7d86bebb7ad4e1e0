#include <doctest.h>

#include "mpc/structure.hpp"

using namespace mpc;

TEST_CASE("eventual period detection") {
  EventuallyPeriodicSpec alt{{}, word_from_string("01")};
  PeriodVerdict v = detect_eventual_period(alt, 8, 16, 64);
  CHECK(v.found);
  CHECK(v.period == 2);
  CHECK(v.preperiod == 0);

  // 1(001)^inf is purely periodic: it equals (100)^inf
  EventuallyPeriodicSpec pre{word_from_string("1"), word_from_string("001")};
  v = detect_eventual_period(pre, 8, 16, 64);
  CHECK(v.found);
  CHECK(v.period == 3);
  CHECK(v.preperiod == 0);

  // a genuine preperiod
  EventuallyPeriodicSpec lead{word_from_string("11"), word_from_string("01")};
  v = detect_eventual_period(lead, 8, 16, 64);
  CHECK(v.found);
  CHECK(v.period == 2);
  CHECK(v.preperiod == 1);

  v = detect_eventual_period(fibonacci_rotation(), 16, 32, 256);
  CHECK(!v.found);

  CHECK_THROWS_AS(detect_eventual_period(alt, 8, 16, 16), InsufficientPrefix);
}

TEST_CASE("periodicity by projection") {
  // Sturmian words are aperiodic under every projection
  ProjectionVerdict v = projection_verdict(fibonacci_rotation(), 16, 32, 256);
  CHECK(v.entries.size() == 2);  // 2^2 - 2 proper nonempty subsets
  CHECK(!v.periodic_by_projection);

  // A three-letter word whose {0} letters appear periodically
  EventuallyPeriodicSpec mixed{{}, word_from_string("012021")};
  ProjectionVerdict m = projection_verdict(mixed, 8, 8, 64);
  CHECK(m.entries.size() == 6);
  CHECK(m.periodic_by_projection);
}

TEST_CASE("recurrence check") {
  RecurrenceVerdict sturmian = recurrence_check(fibonacci_rotation(), 8, 256);
  CHECK(sturmian.recurrent);

  LacunarySpec lac{LacunarySpec::Variant::PowersOfThree, 100000};
  RecurrenceVerdict v = recurrence_check(lac, 8, 64);
  CHECK(!v.recurrent);
  // the factor around the isolated 1 at position 3 never recurs in 64 letters
  bool found_failure = false;
  for (const auto& e : v.per_length)
    if (!e.recurrent) {
      found_failure = true;
      CHECK(e.failing_factor.size() == e.length);
    }
  CHECK(found_failure);

  CHECK_THROWS_AS(recurrence_check(lac, 8, 16), InsufficientPrefix);
}

TEST_CASE("balance check") {
  BalanceVerdict sturmian = balance_check(fibonacci_rotation(), 32, 256);
  CHECK(sturmian.balanced);

  ExplicitSpec unbalanced{word_from_string("0011001100110011"), 2};
  BalanceVerdict v = balance_check(unbalanced, 4, 16);
  CHECK(!v.balanced);
  CHECK(v.u.size() == v.violating_n);
  CHECK(v.v.size() == v.violating_n);

  EventuallyPeriodicSpec tri{{}, word_from_string("012")};
  CHECK_THROWS(balance_check(tri, 4, 32));
}

TEST_CASE("edge graph connectivity") {
  OmegaSample om = make_omega_sample(
      {word_from_string("01"), word_from_string("12"), word_from_string("20")},
      "explicit");
  EdgeGraph g = edge_graph(om, 0, 1, 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.strongly_connected);

  OmegaSample acyclic =
      make_omega_sample({word_from_string("01"), word_from_string("02")}, "explicit");
  EdgeGraph h = edge_graph(acyclic, 0, 1, 3);
  CHECK(!h.strongly_connected);

  // relabeling letters does not change connectivity
  OmegaSample relabeled = make_omega_sample(
      {word_from_string("12"), word_from_string("20"), word_from_string("01")},
      "explicit");
  CHECK(edge_graph(relabeled, 0, 1, 3).strongly_connected ==
        g.strongly_connected);
}
