#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mpc/rotation.hpp"
#include "mpc/types.hpp"

namespace mpc {

// Toeplitz word in the 2-adic sense: alpha(n) = valuation_map(tau(n - gamma))
// where tau is the 2-adic valuation.  gamma is truncated to its m lowest
// binary digits (LSB first), which determines tau(n - gamma) whenever the
// valuation is below m; otherwise ValuationUndetermined is thrown.
struct ToeplitzSpec {
  std::vector<std::uint8_t> gamma_bits;  // LSB first, size m, 1 <= m <= 62
  std::vector<Letter> valuation_map;     // size m; default v mod r
  int alphabet;

  Letter eval(std::uint64_t n) const;

  // The canonical instance alpha(n) = tau(n+1) mod r: gamma = -1 truncated
  // to m ones, map v -> v mod r.
  static ToeplitzSpec canonical(int r, std::size_t m = 40);
};

struct LacunarySpec {
  enum class Variant { PowersOfThree, LiteralConcatenation };
  Variant variant;
  std::uint64_t horizon;

  Letter eval(std::uint64_t n) const;
};

struct EventuallyPeriodicSpec {
  FiniteWord preperiod;
  FiniteWord period;  // nonempty

  Letter eval(std::uint64_t n) const;
};

struct ExplicitSpec {
  FiniteWord word;
  int alphabet;

  Letter eval(std::uint64_t n) const;
};

// A finite union of full shifts over two-letter blocks {i, i+1}; not an
// indexable word, but loadable from the same spec files (see omega.hpp).
struct OmegaUnionSpec {
  int alphabet;
  std::size_t length;
  std::uint64_t cap;
};

using WordSpec = std::variant<RotationSpec, ToeplitzSpec, LacunarySpec,
                              EventuallyPeriodicSpec, ExplicitSpec, OmegaUnionSpec>;

Letter eval_word(const WordSpec& spec, std::uint64_t n);
FiniteWord prefix(const WordSpec& spec, std::uint64_t N);
int alphabet_size(const WordSpec& spec);
std::string kind_name(const WordSpec& spec);

}  // namespace mpc
