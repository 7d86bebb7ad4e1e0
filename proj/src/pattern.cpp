#include "mpc/pattern.hpp"

#include <stdexcept>

namespace mpc {

Pattern::Pattern(std::vector<std::uint32_t> offsets) : offs_(std::move(offsets)) {
  for (std::size_t i = 0; i + 1 < offs_.size(); ++i)
    if (offs_[i] >= offs_[i + 1])
      throw std::invalid_argument("pattern offsets must be strictly increasing");
}

Pattern Pattern::block(std::size_t k) {
  std::vector<std::uint32_t> offs(k);
  for (std::size_t i = 0; i < k; ++i) offs[i] = static_cast<std::uint32_t>(i);
  return Pattern(std::move(offs));
}

Pattern Pattern::parse(std::string_view csv) {
  std::vector<std::uint32_t> offs;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    offs.push_back(static_cast<std::uint32_t>(
        std::stoul(std::string(csv.substr(pos, comma - pos)))));
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  return Pattern(std::move(offs));
}

Pattern Pattern::translated(std::uint32_t n) const {
  std::vector<std::uint32_t> offs(offs_);
  for (auto& o : offs) o += n;
  return Pattern(std::move(offs));
}

Pattern Pattern::canonicalized(std::uint32_t* shift) const {
  if (offs_.empty()) {
    if (shift) *shift = 0;
    return *this;
  }
  std::uint32_t t = offs_.front();
  if (shift) *shift = t;
  std::vector<std::uint32_t> offs(offs_);
  for (auto& o : offs) o -= t;
  return Pattern(std::move(offs));
}

std::string Pattern::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < offs_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(offs_[i]);
  }
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

void enumerate_patterns(const PatternWindow& win,
                        const std::function<void(const Pattern&)>& fn) {
  if (win.k == 0 || win.k > win.width)
    throw std::invalid_argument("pattern size must be in [1, window width]");
  std::vector<std::uint32_t> offs(win.k);
  offs[0] = 0;
  for (std::uint32_t i = 1; i < win.k; ++i) offs[i] = i;
  while (true) {
    fn(Pattern(offs));
    // next combination of offs[1..k-1] from {1, ..., width-1}
    int i = static_cast<int>(win.k) - 1;
    while (i >= 1 && offs[i] == win.width - (win.k - i)) --i;
    if (i < 1) break;
    ++offs[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < win.k; ++j)
      offs[j] = offs[j - 1] + 1;
  }
}

void sub_patterns(const Pattern& s, std::size_t j,
                  const std::function<void(const Pattern&)>& fn) {
  if (j < 1 || j > s.size())
    throw std::invalid_argument("sub-pattern size out of range");
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  const std::size_t n = s.size();
  while (true) {
    std::vector<std::uint32_t> offs(j);
    for (std::size_t i = 0; i < j; ++i) offs[i] = s[idx[i]];
    fn(Pattern(std::move(offs)));
    int i = static_cast<int>(j) - 1;
    while (i >= 0 && idx[i] == n - (j - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace mpc
