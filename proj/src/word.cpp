#include "mpc/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mpc {

FiniteWord word_from_string(std::string_view s) {
  FiniteWord w;
  w.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("word letters must be digits");
    w.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

std::string word_to_string(const FiniteWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter a : w) s.push_back(static_cast<char>('0' + a));
  return s;
}

Letter ToeplitzSpec::eval(std::uint64_t n) const {
  const std::size_t m = gamma_bits.size();
  std::uint64_t gamma_low = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (gamma_bits[i]) gamma_low |= std::uint64_t{1} << i;
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  std::uint64_t d = (n - gamma_low) & mask;
  if (d == 0) throw ValuationUndetermined();
  unsigned v = static_cast<unsigned>(std::countr_zero(d));
  return valuation_map[v];
}

ToeplitzSpec ToeplitzSpec::canonical(int r, std::size_t m) {
  ToeplitzSpec spec;
  spec.gamma_bits.assign(m, 1);
  spec.valuation_map.resize(m);
  for (std::size_t v = 0; v < m; ++v)
    spec.valuation_map[v] = static_cast<Letter>(v % static_cast<std::size_t>(r));
  spec.alphabet = r;
  return spec;
}

Letter LacunarySpec::eval(std::uint64_t n) const {
  if (n > horizon) throw HorizonExceeded();
  if (variant == Variant::PowersOfThree) {
    if (n < 3) return 0;
    std::uint64_t p = 3;
    while (p < n) p *= 3;
    return p == n ? 1 : 0;
  }
  // Literal concatenation 1 0^3 1 0^9 1 0^27 ...: ones at k + (3^{k+1}-3)/2.
  std::uint64_t pos = 0, gap = 3;
  for (std::uint64_t k = 0; pos <= n; ++k) {
    if (pos == n) return 1;
    pos += 1 + gap;
    gap *= 3;
  }
  return 0;
}

Letter EventuallyPeriodicSpec::eval(std::uint64_t n) const {
  if (period.empty()) throw std::invalid_argument("period must be nonempty");
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

Letter ExplicitSpec::eval(std::uint64_t n) const {
  if (n >= word.size()) throw HorizonExceeded();
  return word[n];
}

Letter eval_word(const WordSpec& spec, std::uint64_t n) {
  return std::visit(
      [n](const auto& s) -> Letter {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OmegaUnionSpec>) {
          throw std::domain_error("omega_union spec is a set of words, not an indexable word");
        } else {
          return s.eval(n);
        }
      },
      spec);
}

FiniteWord prefix(const WordSpec& spec, std::uint64_t N) {
  FiniteWord w;
  w.reserve(N);
  for (std::uint64_t n = 0; n < N; ++n) w.push_back(eval_word(spec, n));
  return w;
}

int alphabet_size(const WordSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RotationSpec>) {
          return s.alphabet_size();
        } else if constexpr (std::is_same_v<T, ToeplitzSpec>) {
          return s.alphabet;
        } else if constexpr (std::is_same_v<T, LacunarySpec>) {
          return 2;
        } else if constexpr (std::is_same_v<T, EventuallyPeriodicSpec>) {
          Letter m = 0;
          for (Letter a : s.preperiod) m = std::max(m, a);
          for (Letter a : s.period) m = std::max(m, a);
          return std::max(2, m + 1);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          return s.alphabet;
        } else {
          return s.alphabet;
        }
      },
      spec);
}

std::string kind_name(const WordSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RotationSpec>) return "rotation";
        else if constexpr (std::is_same_v<T, ToeplitzSpec>) return "toeplitz";
        else if constexpr (std::is_same_v<T, LacunarySpec>) return "lacunary";
        else if constexpr (std::is_same_v<T, EventuallyPeriodicSpec>) return "eventually_periodic";
        else if constexpr (std::is_same_v<T, ExplicitSpec>) return "explicit";
        else return "omega_union";
      },
      spec);
}

}  // namespace mpc
