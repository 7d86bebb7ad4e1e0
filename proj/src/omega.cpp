#include "mpc/omega.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mpc {

bool OmegaSample::contains(const FiniteWord& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

OmegaSample make_omega_sample(std::vector<FiniteWord> members, std::string provenance) {
  OmegaSample om;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  om.window = members.empty() ? 0 : members.front().size();
  for (const auto& w : members)
    if (w.size() != om.window)
      throw std::invalid_argument("omega sample members must have equal length");
  om.members = std::move(members);
  om.provenance = std::move(provenance);
  return om;
}

OmegaSample build_omega_union(const std::vector<std::array<Letter, 2>>& blocks,
                              std::size_t L, std::uint64_t cap) {
  if (L < 1) throw std::invalid_argument("window length must be at least 1");
  if (L >= 63 || (std::uint64_t{1} << L) > cap) throw CapExceeded();
  std::vector<FiniteWord> members;
  for (const auto& block : blocks) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << L); ++bits) {
      FiniteWord w(L);
      for (std::size_t i = 0; i < L; ++i) w[i] = block[(bits >> i) & 1];
      members.push_back(std::move(w));
    }
  }
  return make_omega_sample(std::move(members), "explicit-union");
}

OmegaSample build_omega_union(int r, std::size_t L, std::uint64_t cap) {
  std::vector<std::array<Letter, 2>> blocks;
  for (int i = 0; i + 1 < r; ++i)
    blocks.push_back({static_cast<Letter>(i), static_cast<Letter>(i + 1)});
  return build_omega_union(blocks, L, cap);
}

OmegaSample sample_orbit_windows(const WordSpec& spec, std::size_t L,
                                 std::uint64_t n_shifts) {
  FiniteWord pre = prefix(spec, n_shifts + L);
  std::vector<FiniteWord> members;
  for (std::uint64_t n = 0; n < n_shifts; ++n)
    members.emplace_back(pre.begin() + n, pre.begin() + n + L);
  return make_omega_sample(std::move(members),
                           "sampled-from-orbit L=" + std::to_string(L) +
                               " shifts=" + std::to_string(n_shifts));
}

OmegaSample sample_orbit_projections(const FiniteWord& pre, const Pattern& s,
                                     std::uint64_t n_shifts) {
  if (s.empty()) throw std::invalid_argument("empty pattern");
  if (n_shifts == 0 || pre.size() < n_shifts + s.max()) throw InsufficientPrefix();
  std::vector<FiniteWord> members;
  for (std::uint64_t n = 0; n < n_shifts; ++n) {
    FiniteWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) w[i] = pre[n + s[i]];
    members.push_back(std::move(w));
  }
  return make_omega_sample(std::move(members),
                           "sampled-from-orbit pattern=" + s.to_string() +
                               " shifts=" + std::to_string(n_shifts));
}

OmegaSample sample_orbit_projections(const WordSpec& spec, const Pattern& s,
                                     std::uint64_t n_shifts) {
  FiniteWord pre = prefix(spec, n_shifts + s.max() + 1);
  return sample_orbit_projections(pre, s, n_shifts);
}

OmegaSample restrict_columns(const OmegaSample& om, const Pattern& columns) {
  if (!columns.empty() && columns.max() >= om.window)
    throw std::invalid_argument("pattern exceeds window");
  std::vector<FiniteWord> members;
  for (const auto& w : om.members) {
    FiniteWord v(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) v[i] = w[columns[i]];
    members.push_back(std::move(v));
  }
  return make_omega_sample(std::move(members), om.provenance + " refined");
}

OmegaSample extension_closure(const OmegaSample& om) {
  std::set<FiniteWord> all(om.members.begin(), om.members.end());
  std::vector<FiniteWord> frontier(om.members);
  const std::size_t L = om.window;
  while (!frontier.empty()) {
    std::vector<FiniteWord> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < L; ++i) {
        FiniteWord v(w.begin(), w.begin() + i + 1);
        v.resize(L, w[i]);
        if (all.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return make_omega_sample(std::vector<FiniteWord>(all.begin(), all.end()),
                           om.provenance + " extension-closed");
}

}  // namespace mpc
