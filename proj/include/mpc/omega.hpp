#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mpc/pattern.hpp"
#include "mpc/types.hpp"
#include "mpc/word.hpp"

namespace mpc {

// A finite stand-in for a set Omega of infinite words: equal-length windows,
// deduplicated and sorted.  Provenance records how the sample was produced.
struct OmegaSample {
  std::vector<FiniteWord> members;  // sorted, deduplicated, equal length
  std::size_t window = 0;
  std::string provenance;

  bool contains(const FiniteWord& w) const;
};

OmegaSample make_omega_sample(std::vector<FiniteWord> members, std::string provenance);

// All length-L words over each two-letter block {i, i+1}, deduplicated
// across blocks.  Throws CapExceeded if a block enumeration (2^L) exceeds cap.
OmegaSample build_omega_union(const std::vector<std::array<Letter, 2>>& blocks,
                              std::size_t L, std::uint64_t cap);
// Convenience: the blocks {0,1}, {1,2}, ..., {r-2, r-1}.
OmegaSample build_omega_union(int r, std::size_t L, std::uint64_t cap);

// Windows alpha(n) ... alpha(n+L-1) for n = 0 .. n_shifts-1.
OmegaSample sample_orbit_windows(const WordSpec& spec, std::size_t L,
                                 std::uint64_t n_shifts);
// Projections alpha[n + S] for n = 0 .. n_shifts-1.
OmegaSample sample_orbit_projections(const WordSpec& spec, const Pattern& s,
                                     std::uint64_t n_shifts);
OmegaSample sample_orbit_projections(const FiniteWord& prefix, const Pattern& s,
                                     std::uint64_t n_shifts);

// Keep only the given columns of every member.
OmegaSample restrict_columns(const OmegaSample& om, const Pattern& columns);

// Fixpoint closure under the extension rule: for every member w and every
// i < L, add w(0) ... w(i-1) w(i)^{L-i}.
OmegaSample extension_closure(const OmegaSample& om);

}  // namespace mpc
