#include "mpc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpc {

namespace {

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw std::invalid_argument(std::string("word spec: missing or non-string field '") +
                                field + "'");
  return j[field].get<std::string>();
}

std::int64_t require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::invalid_argument(std::string("word spec: missing or non-integer field '") +
                                field + "'");
  return j[field].get<std::int64_t>();
}

}  // namespace

WordSpec word_spec_from_json(const json& j) {
  std::string kind = require_string(j, "kind");
  if (kind == "rotation") {
    if (!j.contains("cf") || !j["cf"].is_array())
      throw std::invalid_argument("word spec: rotation needs integer array 'cf'");
    std::vector<std::uint64_t> cf;
    for (const auto& t : j["cf"]) cf.push_back(t.get<std::uint64_t>());
    if (!j.contains("cuts") || !j["cuts"].is_array())
      throw std::invalid_argument("word spec: rotation needs string array 'cuts'");
    std::vector<CutExpr> cuts;
    for (const auto& c : j["cuts"]) cuts.push_back(parse_cut_expr(c.get<std::string>()));
    return RotationSpec(std::move(cf), std::move(cuts));
  }
  if (kind == "toeplitz") {
    int r = static_cast<int>(require_int(j, "alphabet"));
    if (j.contains("gamma_bits")) {
      ToeplitzSpec spec;
      spec.alphabet = r;
      for (const auto& b : j["gamma_bits"])
        spec.gamma_bits.push_back(b.get<std::uint8_t>());
      if (j.contains("valuation_map")) {
        for (const auto& v : j["valuation_map"])
          spec.valuation_map.push_back(v.get<Letter>());
      } else {
        for (std::size_t v = 0; v < spec.gamma_bits.size(); ++v)
          spec.valuation_map.push_back(static_cast<Letter>(v % r));
      }
      return spec;
    }
    std::size_t m = j.contains("m") ? j["m"].get<std::size_t>() : 40;
    return ToeplitzSpec::canonical(r, m);
  }
  if (kind == "lacunary") {
    std::string variant = require_string(j, "variant");
    LacunarySpec spec;
    if (variant == "powers-of-three")
      spec.variant = LacunarySpec::Variant::PowersOfThree;
    else if (variant == "literal-concatenation")
      spec.variant = LacunarySpec::Variant::LiteralConcatenation;
    else
      throw std::invalid_argument("word spec: unknown lacunary variant '" + variant + "'");
    spec.horizon = j.contains("horizon") ? j["horizon"].get<std::uint64_t>() : 1000000;
    return spec;
  }
  if (kind == "eventually_periodic") {
    EventuallyPeriodicSpec spec;
    spec.preperiod = word_from_string(j.value("preperiod", std::string()));
    spec.period = word_from_string(require_string(j, "period"));
    if (spec.period.empty())
      throw std::invalid_argument("word spec: period must be nonempty");
    return spec;
  }
  if (kind == "explicit") {
    ExplicitSpec spec;
    spec.word = word_from_string(require_string(j, "word"));
    spec.alphabet = static_cast<int>(require_int(j, "alphabet"));
    return spec;
  }
  if (kind == "omega_union") {
    OmegaUnionSpec spec;
    spec.alphabet = static_cast<int>(require_int(j, "alphabet"));
    spec.length = static_cast<std::size_t>(require_int(j, "length"));
    spec.cap = j.contains("cap") ? j["cap"].get<std::uint64_t>() : (1ull << 20);
    return spec;
  }
  throw std::invalid_argument("word spec: unknown kind '" + kind + "'");
}

json word_spec_to_json(const WordSpec& spec) {
  json j;
  j["kind"] = kind_name(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RotationSpec>) {
          j["cf"] = s.cf_terms();
          json cuts = json::array();
          for (const auto& c : s.cuts()) cuts.push_back(format_cut_expr(c));
          j["cuts"] = cuts;
        } else if constexpr (std::is_same_v<T, ToeplitzSpec>) {
          j["alphabet"] = s.alphabet;
          j["gamma_bits"] = s.gamma_bits;
          j["valuation_map"] = s.valuation_map;
        } else if constexpr (std::is_same_v<T, LacunarySpec>) {
          j["variant"] = s.variant == LacunarySpec::Variant::PowersOfThree
                             ? "powers-of-three"
                             : "literal-concatenation";
          j["horizon"] = s.horizon;
        } else if constexpr (std::is_same_v<T, EventuallyPeriodicSpec>) {
          j["preperiod"] = word_to_string(s.preperiod);
          j["period"] = word_to_string(s.period);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          j["word"] = word_to_string(s.word);
          j["alphabet"] = s.alphabet;
        } else if constexpr (std::is_same_v<T, OmegaUnionSpec>) {
          j["alphabet"] = s.alphabet;
          j["length"] = s.length;
          j["cap"] = s.cap;
        }
      },
      spec);
  return j;
}

WordSpec load_word_spec(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open word spec file: " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("word spec parse error in " + file.string() + ": " +
                                e.what());
  }
  return word_spec_from_json(j);
}

json to_json(const Pattern& p) { return json(p.offsets()); }

json to_json(const ParikhVector& v) { return json(v.counts); }

json to_json(const SFactorSet& s) {
  json j;
  j["pattern"] = to_json(s.pattern);
  j["positions"] = s.positions;
  j["mode"] = mode_name(s.mode);
  j["size"] = s.size();
  if (s.mode == Mode::Plain) {
    json words = json::array();
    for (const auto& w : s.words) words.push_back(word_to_string(w));
    j["words"] = words;
  } else {
    json vecs = json::array();
    for (const auto& v : s.vectors) vecs.push_back(to_json(v));
    j["parikh_vectors"] = vecs;
  }
  j["witnesses"] = s.witnesses;
  return j;
}

json to_json(const ComplexityReport& r, bool include_timings) {
  json j;
  j["value"] = r.value;
  j["witness"] = to_json(r.witness);
  j["window"] = r.window;
  j["positions"] = r.positions;
  j["mode"] = mode_name(r.mode);
  j["status"] = r.status;
  if (r.ceiling) j["ceiling"] = *r.ceiling;
  j["ceiling_exceeded"] = r.ceiling_exceeded;
  j["budget_exhausted"] = r.budget_exhausted;
  j["patterns_examined"] = r.patterns_examined;
  if (include_timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json to_json(const OmegaSample& om) {
  json j;
  j["window"] = om.window;
  j["provenance"] = om.provenance;
  json members = json::array();
  for (const auto& w : om.members) members.push_back(word_to_string(w));
  j["members"] = members;
  return j;
}

json to_json(const PeriodVerdict& v) {
  json j;
  j["found"] = v.found;
  if (v.found) {
    j["period"] = v.period;
    j["preperiod"] = v.preperiod;
  }
  j["p_max"] = v.p_max;
  j["q_max"] = v.q_max;
  j["length"] = v.length;
  return j;
}

json to_json(const ProjectionVerdict& v) {
  json j;
  j["periodic_by_projection"] = v.periodic_by_projection;
  json entries = json::array();
  for (const auto& e : v.entries) {
    json ej;
    ej["subset"] = word_to_string(e.subset);
    ej["verdict"] = to_json(e.verdict);
    entries.push_back(ej);
  }
  j["entries"] = entries;
  return j;
}

json to_json(const RecurrenceVerdict& v) {
  json j;
  j["recurrent"] = v.recurrent;
  json entries = json::array();
  for (const auto& e : v.per_length) {
    json ej;
    ej["length"] = e.length;
    ej["recurrent"] = e.recurrent;
    if (!e.recurrent) {
      ej["failing_factor"] = word_to_string(e.failing_factor);
      ej["factor_position"] = e.factor_position;
    }
    entries.push_back(ej);
  }
  j["per_length"] = entries;
  return j;
}

json to_json(const BalanceVerdict& v) {
  json j;
  j["balanced"] = v.balanced;
  j["n_max"] = v.n_max;
  j["length"] = v.length;
  if (!v.balanced) {
    j["violating_n"] = v.violating_n;
    j["u"] = word_to_string(v.u);
    j["v"] = word_to_string(v.v);
  }
  return j;
}

json to_json(const EdgeGraph& g) {
  json j;
  j["alphabet"] = g.r;
  json edges = json::array();
  for (const auto& [a, b] : g.edges)
    edges.push_back(json::array({static_cast<int>(a), static_cast<int>(b)}));
  j["edges"] = edges;
  j["strongly_connected"] = g.strongly_connected;
  return j;
}

json to_json(const StarPattern& sp) {
  json j;
  j["offsets"] = sp.offsets;
  j["depth"] = sp.depth();
  j["requested_depth"] = sp.requested_depth;
  j["exhausted"] = sp.exhausted;
  if (sp.exhausted) j["failing_bound"] = sp.failing_bound;
  json att = json::array();
  for (const auto& a : sp.attestations) {
    json aj;
    aj["level"] = a.level;
    aj["bound"] = a.bound;
    aj["distinct_words"] = a.distinct_words;
    att.push_back(aj);
  }
  j["attestations"] = att;
  return j;
}

json to_json(const StarVerdict& v) {
  json j;
  j["passes"] = v.passes;
  j["i_max"] = v.i_max;
  j["n_shifts"] = v.n_shifts;
  j["checked"] = v.checked;
  if (!v.passes) {
    j["failing_i"] = v.failing_i;
    j["failing_level"] = v.failing_level;
    j["failing_word"] = word_to_string(v.failing_word);
  }
  return j;
}

json to_json(const RefinementResult& r) {
  json j;
  j["refined"] = to_json(r.refined);
  j["achieved_m"] = r.achieved_m;
  j["achieved_level"] = r.achieved_level;
  j["budget_exhausted"] = r.budget_exhausted;
  j["target_unreachable"] = r.target_unreachable;
  if (r.target_unreachable) j["shortfall_level"] = r.shortfall_level;
  j["colorings"] = r.colorings;
  return j;
}

json to_json(const SuperstationaryVerdict& v) {
  json j;
  j["passes"] = v.passes;
  j["level"] = v.level;
  if (!v.passes) {
    j["first"] = to_json(v.first);
    j["second"] = to_json(v.second);
  }
  return j;
}

json to_json(const ClosureVerdict& v) {
  json j;
  j["passes"] = v.passes;
  j["checked"] = v.checked;
  if (!v.passes) {
    j["failing_member"] = v.failing_member;
    j["failing_i"] = v.failing_i;
    j["failing_word"] = word_to_string(v.failing_word);
  }
  return j;
}

json to_json(const LowerBoundReport& r) {
  json j;
  j["alphabet"] = r.r;
  j["k"] = r.k;
  json edges = json::array();
  for (const auto& [a, b] : r.f_edges)
    edges.push_back(json::array({static_cast<int>(a), static_cast<int>(b)}));
  j["f_edges"] = edges;
  j["f_connected"] = r.f_connected;
  j["parikh_count"] = r.parikh_count;
  j["bound"] = r.bound;
  j["bound_met"] = r.bound_met;
  return j;
}

std::string dump_json(const json& j) {
  // nlohmann's default object is key-sorted already; fixed indent + trailing
  // newline makes output byte-stable.
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + file.string());
  out << text;
}

std::string complexity_csv(const std::vector<ComplexityReport>& rows,
                           bool include_timings) {
  std::ostringstream out;
  out << "k,window,positions,mode,value,witness,status";
  if (include_timings) out << ",elapsed_ms";
  out << "\n";
  for (const auto& r : rows) {
    out << r.witness.size() << ',' << r.window << ',' << r.positions << ','
        << mode_name(r.mode) << ',' << r.value << ",\"" << r.witness.to_string()
        << "\"," << r.status;
    if (include_timings) out << ',' << r.elapsed_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace mpc
