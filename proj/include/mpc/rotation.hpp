#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/rational.hpp"
#include "mpc/types.hpp"

namespace mpc {

// A cut is the exact value a + b*theta with rational a, b.  This covers
// rational cuts (b = 0) and the "1-theta" style expressions the word files
// use.
struct CutExpr {
  Rat a;
  Rat b;
};

// Accepted forms: "p/q", "theta", "3/4*theta", "1-theta", "1/2+3*theta", ...
// A sum of at most one rational term and at most one theta term.
CutExpr parse_cut_expr(std::string_view s);
std::string format_cut_expr(const CutExpr& c);

// A rotation word alpha(n) = i iff {n*theta} lies in [c_i, c_{i+1}) mod 1.
//
// theta is given by its continued fraction [0; a_1, a_2, ...] truncated to
// finitely many terms.  All comparisons against theta are interval
// comparisons over exact rational convergents with precision escalation:
// theta is known to lie strictly between any two consecutive convergents, so
// a comparison that separates from the interval at some depth is exact.  A
// comparison that cannot be separated at the deepest available convergent
// pair throws PrecisionExhausted (for cut comparisons; it signals a rational
// dependency between theta and a cut at the available truncation) or
// HorizonExceeded (for floor(n*theta), meaning n is past the horizon the
// truncation supports).
class RotationSpec {
 public:
  RotationSpec(std::vector<std::uint64_t> cf_terms, std::vector<CutExpr> cuts);

  int alphabet_size() const { return static_cast<int>(cuts_.size()) - 1; }
  const std::vector<CutExpr>& cuts() const { return cuts_; }
  const std::vector<std::uint64_t>& cf_terms() const { return cf_; }

  Letter eval(std::uint64_t n) const;

  // Exact sign of a + b*theta: -1, 0 or +1.  0 only when a = b = 0.
  int sign(const Rat& a, const Rat& b) const;

  // floor(n*theta), exact.
  BigInt floor_n_theta(std::uint64_t n) const;

  // A spec identical to this one but truncated to fewer continued-fraction
  // terms (used by the consistency tests).
  RotationSpec truncated(std::size_t terms) const;

 private:
  std::vector<std::uint64_t> cf_;
  std::vector<Rat> conv_;  // convergents of [0; a_1 .. a_m], conv_[0] = 0
  std::vector<CutExpr> cuts_;  // c_0 .. c_r with c_r = c_0 + 1
};

// Fibonacci rotation: theta = (sqrt(5)-1)/2 = [0; 1, 1, 1, ...] with cuts
// (0, 1-theta).  The emitted word is Sturmian.
RotationSpec fibonacci_rotation(std::size_t cf_terms = 42);

// Three-letter rotation with the same theta and cuts (0, 1/3, 2/3).
RotationSpec rotation_three_letters(std::size_t cf_terms = 42);

}  // namespace mpc
