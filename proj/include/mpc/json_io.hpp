#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpc/complexity.hpp"
#include "mpc/omega.hpp"
#include "mpc/ramsey.hpp"
#include "mpc/structure.hpp"
#include "mpc/word.hpp"

namespace mpc {

using json = nlohmann::json;

// Word-spec documents: {"kind": "rotation" | "toeplitz" | "lacunary" |
// "eventually_periodic" | "explicit" | "omega_union", ...}.  Parse errors
// throw std::invalid_argument with the offending field named.
WordSpec word_spec_from_json(const json& j);
json word_spec_to_json(const WordSpec& spec);
WordSpec load_word_spec(const std::filesystem::path& file);

// Report serializers.  All output is integer/string only; elapsed times are
// omitted unless asked for, so identical runs produce identical bytes.
json to_json(const Pattern& p);
json to_json(const ParikhVector& v);
json to_json(const SFactorSet& s);
json to_json(const ComplexityReport& r, bool include_timings = false);
json to_json(const OmegaSample& om);
json to_json(const PeriodVerdict& v);
json to_json(const ProjectionVerdict& v);
json to_json(const RecurrenceVerdict& v);
json to_json(const BalanceVerdict& v);
json to_json(const EdgeGraph& g);
json to_json(const StarPattern& sp);
json to_json(const StarVerdict& v);
json to_json(const RefinementResult& r);
json to_json(const SuperstationaryVerdict& v);
json to_json(const ClosureVerdict& v);
json to_json(const LowerBoundReport& r);

// Canonical textual form: sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);
void write_text_file(const std::filesystem::path& file, const std::string& text);

// One row per report: k,window,positions,mode,value,witness,status
// (plus elapsed_ms when timings are requested).
std::string complexity_csv(const std::vector<ComplexityReport>& rows,
                           bool include_timings = false);

}  // namespace mpc
