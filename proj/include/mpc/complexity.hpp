#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpc/omega.hpp"
#include "mpc/pattern.hpp"
#include "mpc/rotation.hpp"
#include "mpc/types.hpp"
#include "mpc/word.hpp"

namespace mpc {

enum class Mode { Plain, Abelian };
std::string mode_name(Mode m);
Mode parse_mode(std::string_view s);

struct ParikhVector {
  std::vector<std::uint32_t> counts;  // indexed by letter

  std::uint32_t total() const;
  auto operator<=>(const ParikhVector&) const = default;
  std::string to_string() const;  // "(2,0,3)"
};

ParikhVector parikh(const FiniteWord& u, int r);

// The deduplicated set of S-factors over positions 0..N (plain) or their
// Parikh classes (abelian), each with one witness position.
struct SFactorSet {
  Pattern pattern;
  std::uint64_t positions = 0;  // inclusive upper shift bound N
  Mode mode = Mode::Plain;
  std::vector<FiniteWord> words;        // plain members, sorted
  std::vector<ParikhVector> vectors;    // abelian members, sorted
  std::vector<std::uint64_t> witnesses; // parallel to the member list

  std::size_t size() const {
    return mode == Mode::Plain ? words.size() : vectors.size();
  }
};

SFactorSet s_factor_set(const WordSpec& word, const Pattern& s, std::uint64_t N,
                        Mode mode);
SFactorSet s_factor_set(const FiniteWord& prefix, int r, const Pattern& s,
                        std::uint64_t N, Mode mode);

std::uint64_t pattern_complexity(const WordSpec& word, const Pattern& s,
                                 std::uint64_t N, Mode mode);
std::uint64_t pattern_complexity(const FiniteWord& prefix, int r, const Pattern& s,
                                 std::uint64_t N, Mode mode);

// {omega[S] : omega in sample}, deduplicated (plain) or Parikh-imaged
// (abelian).  Witnesses index into the member list of the sample.
SFactorSet omega_pattern_set(const OmegaSample& om, const Pattern& s, Mode mode,
                             int r);
std::uint64_t omega_pattern_complexity(const OmegaSample& om, const Pattern& s,
                                       Mode mode, int r);

// Bounded search over all canonical k-patterns within window W, shifts
// 0..N.  Always a certified lower bound for the (infinite) supremum.
struct ComplexityReport {
  std::uint64_t value = 0;
  Pattern witness;
  std::uint32_t window = 0;
  std::uint64_t positions = 0;
  Mode mode = Mode::Plain;
  std::string status = "lower-bound-certified";
  std::optional<std::uint64_t> ceiling;
  bool ceiling_exceeded = false;
  bool budget_exhausted = false;
  std::uint64_t patterns_examined = 0;
  std::int64_t elapsed_ms = 0;
};

struct SearchOptions {
  int workers = 1;
  std::optional<std::uint64_t> ceiling;       // declared theoretical ceiling
  std::optional<std::uint64_t> max_patterns;  // search budget
};

ComplexityReport max_pattern_search(const WordSpec& word, int k, std::uint32_t W,
                                    std::uint64_t N, Mode mode,
                                    const SearchOptions& opts = {});
ComplexityReport max_pattern_search(const FiniteWord& prefix, int r, int k,
                                    std::uint32_t W, std::uint64_t N, Mode mode,
                                    const SearchOptions& opts = {});

// Offsets N_0 < ... < N_{k-1} with eps > {N_0 theta} > ... > 0, found by
// direct scan with exact comparisons.
Pattern rotation_witness_pattern(const RotationSpec& spec, int k, const Rat& eps,
                                 std::uint64_t horizon = 1000000);

// Independent reference engine: plain string sets, no packing, no sharing
// with the production sweep.  Used as the cross-check oracle.
std::uint64_t naive_pattern_complexity(const FiniteWord& prefix, int r,
                                       const Pattern& s, std::uint64_t N,
                                       Mode mode);
std::pair<std::uint64_t, Pattern> naive_max_pattern_search(const FiniteWord& prefix,
                                                           int r, int k,
                                                           std::uint32_t W,
                                                           std::uint64_t N,
                                                           Mode mode);

}  // namespace mpc
