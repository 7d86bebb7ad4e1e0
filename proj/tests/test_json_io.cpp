#include <doctest.h>

#include "mpc/json_io.hpp"

using namespace mpc;

TEST_CASE("word spec round trip") {
  const char* docs[] = {
      R"({"kind":"rotation","cf":[1,1,1,1,1,1,1,1,1,1],"cuts":["0","1-theta","1"]})",
      R"({"kind":"toeplitz","alphabet":3,"m":20})",
      R"({"kind":"lacunary","variant":"powers-of-three","horizon":100000})",
      R"({"kind":"eventually_periodic","preperiod":"1","period":"001"})",
      R"({"kind":"explicit","word":"2101","alphabet":3})",
      R"({"kind":"omega_union","alphabet":3,"length":4,"cap":256})",
  };
  for (const char* doc : docs) {
    WordSpec spec = word_spec_from_json(json::parse(doc));
    json serialized = word_spec_to_json(spec);
    WordSpec again = word_spec_from_json(serialized);
    CHECK(word_spec_to_json(again) == serialized);
  }
}

TEST_CASE("word spec parsing validates") {
  CHECK_THROWS(word_spec_from_json(json::parse(R"({"kind":"nope"})")));
  CHECK_THROWS(word_spec_from_json(json::parse(R"({"kind":"explicit"})")));
  CHECK_THROWS(word_spec_from_json(
      json::parse(R"({"kind":"lacunary","variant":"other"})")));
  CHECK_THROWS(word_spec_from_json(
      json::parse(R"({"kind":"eventually_periodic","period":""})")));
}

TEST_CASE("loaded specs evaluate") {
  WordSpec spec = word_spec_from_json(
      json::parse(R"({"kind":"eventually_periodic","period":"01"})"));
  CHECK(word_to_string(prefix(spec, 6)) == "010101");

  WordSpec rot = word_spec_from_json(json::parse(
      R"({"kind":"rotation","cf":[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1],"cuts":["0","1-theta","1"]})"));
  CHECK(word_to_string(prefix(rot, 8)) == "01011010");
}

TEST_CASE("report serialization is deterministic and float-free") {
  ComplexityReport rep;
  rep.value = 5;
  rep.witness = Pattern({0, 2, 7});
  rep.window = 16;
  rep.positions = 100;
  rep.mode = Mode::Abelian;
  rep.patterns_examined = 105;
  rep.elapsed_ms = 1234;
  std::string a = dump_json(to_json(rep));
  std::string b = dump_json(to_json(rep));
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);  // timings off by default
  bool float_free = a.find('.') == std::string::npos;
  CHECK(float_free);

  std::string timed = dump_json(to_json(rep, true));
  CHECK(timed.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("csv output") {
  ComplexityReport rep;
  rep.value = 4;
  rep.witness = Pattern({0, 3});
  rep.window = 8;
  rep.positions = 50;
  rep.mode = Mode::Plain;
  std::string csv = complexity_csv({rep});
  CHECK(csv == "k,window,positions,mode,value,witness,status\n"
               "2,8,50,plain,4,\"0,3\",lower-bound-certified\n");
}

TEST_CASE("verdict serializers include bounds") {
  PeriodVerdict v;
  v.found = true;
  v.period = 2;
  v.p_max = 8;
  v.q_max = 16;
  v.length = 64;
  json j = to_json(v);
  CHECK(j["p_max"] == 8);
  CHECK(j["q_max"] == 16);
  CHECK(j["length"] == 64);
  CHECK(j["period"] == 2);
}
