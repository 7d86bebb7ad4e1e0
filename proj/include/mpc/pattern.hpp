#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mpc {

// A k-pattern: strictly increasing offsets s_1 < s_2 < ... < s_k.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::uint32_t> offsets);

  static Pattern block(std::size_t k);          // {0, 1, ..., k-1}
  static Pattern parse(std::string_view csv);   // "0,2,5"

  Pattern translated(std::uint32_t n) const;    // n + S
  // Shift so the first offset is 0; reports the removed shift if asked.
  Pattern canonicalized(std::uint32_t* shift = nullptr) const;

  std::size_t size() const { return offs_.size(); }
  bool empty() const { return offs_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return offs_[i]; }
  std::uint32_t max() const { return offs_.back(); }
  const std::vector<std::uint32_t>& offsets() const { return offs_; }
  auto begin() const { return offs_.begin(); }
  auto end() const { return offs_.end(); }

  std::string to_string() const;  // comma-joined
  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<std::uint32_t> offs_;
};

struct PatternWindow {
  std::uint32_t width;  // offsets drawn from {0, ..., width-1}
  std::uint32_t k;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// All canonical patterns (first offset 0) of size win.k with offsets below
// win.width, in lexicographic order; exactly C(width-1, k-1) of them.
void enumerate_patterns(const PatternWindow& win,
                        const std::function<void(const Pattern&)>& fn);

// All j-element sub-patterns of S, sorted, in lexicographic order.
void sub_patterns(const Pattern& s, std::size_t j,
                  const std::function<void(const Pattern&)>& fn);

}  // namespace mpc
