#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mpc/json_io.hpp"
#include "mpc/suites.hpp"

namespace fs = std::filesystem;
using namespace mpc;

namespace {

struct CommonArgs {
  std::string word_file;
  int k = 2;
  std::uint32_t window = 32;
  std::uint64_t positions = 1000;
  std::string mode = "plain";
  int workers = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "json";
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_word) {
  auto* w = cmd->add_option("--word", a.word_file, "word spec JSON file");
  if (needs_word) w->required();
  cmd->add_option("--k", a.k, "pattern size");
  cmd->add_option("--window", a.window, "offset window width");
  cmd->add_option("--positions", a.positions, "shift positions to scan");
  cmd->add_option("--mode", a.mode, "plain|abelian");
  cmd->add_option("--workers", a.workers, "worker threads");
  cmd->add_option("--seed", a.seed, "seed for randomized checks");
  cmd->add_option("--out", a.out_dir, "output directory for report files");
  cmd->add_option("--format", a.format, "json|csv");
  cmd->add_flag("--timings", a.timings, "include elapsed times in reports");
}

void emit(const CommonArgs& a, const std::string& stem, const std::string& text) {
  if (a.out_dir.empty()) {
    std::cout << text;
  } else {
    fs::create_directories(a.out_dir);
    std::string ext = a.format == "csv" ? ".csv" : ".json";
    write_text_file(fs::path(a.out_dir) / (stem + ext), text);
  }
}

std::string suite_csv(const SuiteResult& sr) {
  std::ostringstream out;
  out << "check,expected,observed,passed\n";
  for (const auto& c : sr.checks)
    out << '"' << c.name << "\",\"" << c.expected << "\",\"" << c.observed
        << "\"," << (c.passed ? "true" : "false") << "\n";
  return out.str();
}

json suite_json(const SuiteResult& sr, std::uint64_t seed) {
  json j;
  j["suite"] = sr.suite;
  j["seed"] = seed;
  j["passed"] = sr.passed();
  json checks = json::array();
  for (const auto& c : sr.checks) {
    json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["passed"] = c.passed;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern complexity toolkit"};
  app.require_subcommand(1);

  CommonArgs gen_args;
  auto* gen = app.add_subcommand("gen", "print a prefix of the word");
  add_common(gen, gen_args, true);

  CommonArgs cx_args;
  std::string cx_pattern;
  auto* cx = app.add_subcommand("complexity", "pattern complexity of one pattern");
  add_common(cx, cx_args, true);
  cx->add_option("--pattern", cx_pattern, "offsets, e.g. 0,2,5 (default: block of size k)");

  CommonArgs ms_args;
  std::uint64_t ms_ceiling = 0, ms_budget = 0;
  auto* ms = app.add_subcommand("maxsearch", "max pattern complexity over a window");
  add_common(ms, ms_args, true);
  ms->add_option("--ceiling", ms_ceiling, "assert no pattern exceeds this value");
  ms->add_option("--budget", ms_budget, "max patterns to examine");

  CommonArgs st_args;
  std::string st_check = "period";
  std::uint64_t st_pmax = 16, st_qmax = 64, st_len = 0;
  std::size_t st_ellmax = 8, st_nmax = 32;
  auto* st = app.add_subcommand("structure", "structural checks on a word");
  add_common(st, st_args, true);
  st->add_option("--check", st_check, "period|projection|recurrence|balance");
  st->add_option("--p-max", st_pmax, "max period to scan");
  st->add_option("--q-max", st_qmax, "max preperiod to scan");
  st->add_option("--length", st_len, "prefix length (default derived from bounds)");
  st->add_option("--ell-max", st_ellmax, "max factor length for recurrence");
  st->add_option("--n-max", st_nmax, "max factor length for balance");

  CommonArgs rm_args;
  std::string rm_action = "star";
  int rm_depth = 3;
  std::uint64_t rm_horizon = 10000, rm_budget = 1000000, rm_shifts = 8000;
  std::size_t rm_target = 4;
  std::uint32_t rm_first = 0;
  auto* rm = app.add_subcommand("ramsey", "pattern construction and refinement");
  add_common(rm, rm_args, true);
  rm->add_option("--action", rm_action, "star|refine|check");
  rm->add_option("--depth", rm_depth, "construction depth");
  rm->add_option("--horizon", rm_horizon, "scan horizon");
  rm->add_option("--budget", rm_budget, "refinement coloring budget");
  rm->add_option("--target", rm_target, "refinement target size");
  rm->add_option("--shifts", rm_shifts, "orbit shifts to sample");
  rm->add_option("--first-offset", rm_first, "first pattern offset");

  CommonArgs vf_args;
  std::string vf_suite;
  auto* vf = app.add_subcommand("verify", "run a named verification suite");
  add_common(vf, vf_args, false);
  vf->add_option("suite", vf_suite, "suite name, or 'all'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      WordSpec spec = load_word_spec(gen_args.word_file);
      std::cout << word_to_string(prefix(spec, gen_args.positions)) << "\n";
      return 0;
    }

    if (cx->parsed()) {
      WordSpec spec = load_word_spec(cx_args.word_file);
      Pattern p = cx_pattern.empty() ? Pattern::block(cx_args.k)
                                     : Pattern::parse(cx_pattern);
      Mode mode = parse_mode(cx_args.mode);
      SFactorSet set = s_factor_set(spec, p, cx_args.positions, mode);
      emit(cx_args, "complexity", dump_json(to_json(set)));
      return 0;
    }

    if (ms->parsed()) {
      WordSpec spec = load_word_spec(ms_args.word_file);
      Mode mode = parse_mode(ms_args.mode);
      SearchOptions opts;
      opts.workers = ms_args.workers;
      if (ms_ceiling) opts.ceiling = ms_ceiling;
      if (ms_budget) opts.max_patterns = ms_budget;
      ComplexityReport rep = max_pattern_search(spec, ms_args.k, ms_args.window,
                                                ms_args.positions, mode, opts);
      if (ms_args.format == "csv")
        emit(ms_args, "maxsearch", complexity_csv({rep}, ms_args.timings));
      else
        emit(ms_args, "maxsearch", dump_json(to_json(rep, ms_args.timings)));
      return rep.ceiling_exceeded ? 1 : 0;
    }

    if (st->parsed()) {
      WordSpec spec = load_word_spec(st_args.word_file);
      json j;
      if (st_check == "period") {
        std::uint64_t L = st_len ? st_len : st_qmax + 2 * st_pmax;
        j = to_json(detect_eventual_period(spec, st_pmax, st_qmax, L));
      } else if (st_check == "projection") {
        std::uint64_t L = st_len ? st_len : st_qmax + 2 * st_pmax;
        j = to_json(projection_verdict(spec, st_pmax, st_qmax, L));
      } else if (st_check == "recurrence") {
        std::uint64_t L = st_len ? st_len : 4 * st_ellmax;
        j = to_json(recurrence_check(spec, st_ellmax, L));
      } else if (st_check == "balance") {
        std::uint64_t L = st_len ? st_len : 2 * st_nmax;
        j = to_json(balance_check(spec, st_nmax, L));
      } else {
        throw std::invalid_argument("unknown structure check: " + st_check);
      }
      emit(st_args, "structure-" + st_check, dump_json(j));
      return 0;
    }

    if (rm->parsed()) {
      WordSpec spec = load_word_spec(rm_args.word_file);
      if (rm_action == "star") {
        StarPattern sp = star_pattern_construct(spec, rm_depth, rm_horizon, 500,
                                                rm_first);
        emit(rm_args, "ramsey-star", dump_json(to_json(sp)));
        return sp.exhausted ? 1 : 0;
      }
      if (rm_action == "refine" || rm_action == "check") {
        StarPattern sp = star_pattern_construct(spec, rm_depth, rm_horizon, 500,
                                                rm_first);
        if (sp.exhausted) {
          std::cerr << "star construction exhausted at depth " << sp.depth()
                    << "\n";
          return 1;
        }
        FiniteWord pre = prefix(spec, rm_shifts + sp.offsets.back() + 1);
        OmegaSample om = sample_orbit_projections(pre, sp.pattern(), rm_shifts);
        RefinementResult res = ramsey_refine(om, Pattern::block(om.window),
                                             rm_args.k, rm_target, rm_budget);
        if (rm_action == "refine") {
          emit(rm_args, "ramsey-refine", dump_json(to_json(res)));
          return res.target_unreachable || res.budget_exhausted ? 1 : 0;
        }
        OmegaSample refined = restrict_columns(om, res.refined);
        SuperstationaryVerdict v =
            superstationary_check(refined, res.achieved_level);
        emit(rm_args, "ramsey-check", dump_json(to_json(v)));
        return v.passes ? 0 : 1;
      }
      throw std::invalid_argument("unknown ramsey action: " + rm_action);
    }

    if (vf->parsed()) {
      std::vector<std::string> names =
          vf_suite == "all" ? suite_names() : std::vector<std::string>{vf_suite};
      bool all_passed = true;
      for (const auto& name : names) {
        SuiteResult sr = run_suite(name, vf_args.workers, vf_args.seed);
        all_passed = all_passed && sr.passed();
        if (vf_args.format == "csv")
          emit(vf_args, "suite-" + name, suite_csv(sr));
        else
          emit(vf_args, "suite-" + name, dump_json(suite_json(sr, vf_args.seed)));
        for (const auto& c : sr.checks)
          if (!c.passed)
            std::cerr << name << ": " << c.name << ": expected " << c.expected
                      << ", observed " << c.observed << "\n";
        std::cerr << name << ": " << (sr.passed() ? "PASS" : "FAIL") << "\n";
      }
      return all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
