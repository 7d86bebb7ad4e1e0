#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <set>
#include <thread>
#include <unordered_set>

#include "mpc/complexity.hpp"

namespace mpc {
namespace {

struct Best {
  std::uint64_t value = 0;
  std::vector<std::uint32_t> witness;
  std::uint64_t examined = 0;
  bool exhausted = false;
};

void merge(Best& a, const Best& b) {
  if (b.value > a.value ||
      (b.value == a.value && b.value > 0 && b.witness < a.witness))
    a.value = b.value, a.witness = b.witness;
  a.examined += b.examined;
  a.exhausted = a.exhausted || b.exhausted;
}

// One sweep worker.  Patterns are enumerated lexicographically with the
// first offset pinned to 0; workers take subtrees (or leaves, for k = 2) in
// round-robin order so the partition is deterministic.
class Sweeper {
 public:
  Sweeper(const FiniteWord& prefix, int r, int k, std::uint32_t W, std::uint64_t N,
          Mode mode)
      : prefix_(prefix), r_(r), k_(k), W_(W), N_(N), mode_(mode) {
    npos_ = N_ + 1;
    if (mode_ == Mode::Abelian && r_ <= 8) {
      // Parikh key: base-(k+1) digits of the letter counts (letter 0 implied
      // by the total).  Injective since every count is at most k.
      std::uint64_t w = 1;
      std::vector<std::uint64_t> weight(static_cast<std::size_t>(r_), 0);
      for (int a = 1; a < r_; ++a) {
        weight[a] = w;
        w *= static_cast<std::uint64_t>(k_) + 1;
      }
      maxkey_ = static_cast<std::uint64_t>(k_) * (r_ >= 2 ? weight[r_ - 1] : 0);
      if (maxkey_ < (1u << 22)) {
        wpos_.resize(prefix_.size());
        for (std::size_t i = 0; i < prefix_.size(); ++i)
          wpos_[i] = static_cast<std::uint32_t>(weight[prefix_[i]]);
        path_ = maxkey_ < 64 ? Path::AbelianRegister : Path::AbelianBitset;
        bits_.assign(maxkey_ / 64 + 1, 0);
      } else {
        path_ = Path::AbelianGeneric;
      }
    } else if (mode_ == Mode::Abelian) {
      path_ = Path::AbelianGeneric;
    } else if (r_ <= 8 && k_ <= 21) {
      path_ = Path::PlainPacked;
      seen64_.reserve(1024);
    } else {
      path_ = Path::PlainGeneric;
    }
    if (path_ == Path::AbelianRegister || path_ == Path::AbelianBitset) {
      acc32_.assign(static_cast<std::size_t>(k_), std::vector<std::uint32_t>(npos_));
    } else if (path_ == Path::PlainPacked) {
      acc64_.assign(static_cast<std::size_t>(k_), std::vector<std::uint64_t>(npos_));
    }
    offs_.assign(static_cast<std::size_t>(k_), 0);
  }

  Best run(int worker, int nworkers, std::uint64_t budget) {
    worker_ = worker;
    nworkers_ = nworkers;
    budget_ = budget;
    split_ = 0;
    best_ = Best{};
    switch (path_) {
      case Path::AbelianRegister:
      case Path::AbelianBitset:
        for (std::uint64_t n = 0; n < npos_; ++n) acc32_[0][n] = wpos_[n];
        break;
      case Path::PlainPacked:
        for (std::uint64_t n = 0; n < npos_; ++n) acc64_[0][n] = prefix_[n];
        break;
      default:
        break;
    }
    offs_[0] = 0;
    if (k_ == 1) {
      if (worker_ == 0) leaf_single();
    } else {
      recurse(1, 1);
    }
    return best_;
  }

 private:
  enum class Path { AbelianRegister, AbelianBitset, AbelianGeneric, PlainPacked, PlainGeneric };

  bool take_slot() { return static_cast<int>(split_++ % nworkers_) == worker_; }

  bool budget_left() {
    if (best_.examined >= budget_) {
      best_.exhausted = true;
      return false;
    }
    return true;
  }

  void record(std::uint64_t cnt) {
    ++best_.examined;
    if (cnt > best_.value) {
      best_.value = cnt;
      best_.witness.assign(offs_.begin(), offs_.end());
    }
  }

  void recurse(int d, std::uint32_t minoff) {
    if (best_.exhausted) return;
    if (d == k_ - 1) {
      leaf_loop(minoff);
      return;
    }
    const std::uint32_t maxoff = W_ - 1 - (static_cast<std::uint32_t>(k_) - 1 - d);
    for (std::uint32_t o = minoff; o <= maxoff; ++o) {
      if (d == 1 && !take_slot()) continue;
      if (best_.exhausted) return;
      extend(d, o);
      offs_[d] = o;
      recurse(d + 1, o + 1);
    }
  }

  void extend(int d, std::uint32_t o) {
    switch (path_) {
      case Path::AbelianRegister:
      case Path::AbelianBitset: {
        const std::uint32_t* par = acc32_[d - 1].data();
        std::uint32_t* cur = acc32_[d].data();
        const std::uint32_t* wp = wpos_.data() + o;
        for (std::uint64_t n = 0; n < npos_; ++n) cur[n] = par[n] + wp[n];
        break;
      }
      case Path::PlainPacked: {
        const std::uint64_t* par = acc64_[d - 1].data();
        std::uint64_t* cur = acc64_[d].data();
        const Letter* p = prefix_.data() + o;
        const int shift = 3 * d;
        for (std::uint64_t n = 0; n < npos_; ++n)
          cur[n] = par[n] | (static_cast<std::uint64_t>(p[n]) << shift);
        break;
      }
      default:
        break;
    }
  }

  void leaf_loop(std::uint32_t minoff) {
    for (std::uint32_t o = minoff; o < W_; ++o) {
      if (k_ == 2 && !take_slot()) continue;
      if (!budget_left()) return;
      offs_[k_ - 1] = o;
      switch (path_) {
        case Path::AbelianRegister: {
          const std::uint32_t* par = acc32_[k_ - 2].data();
          const std::uint32_t* wp = wpos_.data() + o;
          std::uint64_t mask = 0;
          for (std::uint64_t n = 0; n < npos_; ++n)
            mask |= std::uint64_t{1} << (par[n] + wp[n]);
          record(static_cast<std::uint64_t>(std::popcount(mask)));
          break;
        }
        case Path::AbelianBitset: {
          const std::uint32_t* par = acc32_[k_ - 2].data();
          const std::uint32_t* wp = wpos_.data() + o;
          std::memset(bits_.data(), 0, bits_.size() * sizeof(std::uint64_t));
          for (std::uint64_t n = 0; n < npos_; ++n) {
            std::uint32_t key = par[n] + wp[n];
            bits_[key >> 6] |= std::uint64_t{1} << (key & 63);
          }
          std::uint64_t cnt = 0;
          for (std::uint64_t wbits : bits_) cnt += std::popcount(wbits);
          record(cnt);
          break;
        }
        case Path::PlainPacked: {
          const std::uint64_t* par = acc64_[k_ - 2].data();
          const Letter* p = prefix_.data() + o;
          const int shift = 3 * (k_ - 1);
          seen64_.clear();
          for (std::uint64_t n = 0; n < npos_; ++n)
            seen64_.insert(par[n] | (static_cast<std::uint64_t>(p[n]) << shift));
          record(seen64_.size());
          break;
        }
        default:
          leaf_generic();
          break;
      }
    }
  }

  void leaf_single() {
    if (!budget_left()) return;
    switch (path_) {
      case Path::AbelianRegister: {
        std::uint64_t mask = 0;
        for (std::uint64_t n = 0; n < npos_; ++n) mask |= std::uint64_t{1} << wpos_[n];
        record(static_cast<std::uint64_t>(std::popcount(mask)));
        break;
      }
      case Path::AbelianBitset: {
        std::memset(bits_.data(), 0, bits_.size() * sizeof(std::uint64_t));
        for (std::uint64_t n = 0; n < npos_; ++n)
          bits_[wpos_[n] >> 6] |= std::uint64_t{1} << (wpos_[n] & 63);
        std::uint64_t cnt = 0;
        for (std::uint64_t wbits : bits_) cnt += std::popcount(wbits);
        record(cnt);
        break;
      }
      case Path::PlainPacked: {
        seen64_.clear();
        for (std::uint64_t n = 0; n < npos_; ++n) seen64_.insert(prefix_[n]);
        record(seen64_.size());
        break;
      }
      default:
        leaf_generic();
        break;
    }
  }

  // Cold path for alphabets or pattern sizes beyond the packed encodings.
  void leaf_generic() {
    if (mode_ == Mode::Abelian) {
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<std::uint32_t> counts(static_cast<std::size_t>(r_));
      for (std::uint64_t n = 0; n < npos_; ++n) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < k_; ++i) ++counts[prefix_[n + offs_[i]]];
        seen.insert(counts);
      }
      record(seen.size());
    } else {
      std::set<FiniteWord> seen;
      FiniteWord w(static_cast<std::size_t>(k_));
      for (std::uint64_t n = 0; n < npos_; ++n) {
        for (int i = 0; i < k_; ++i) w[i] = prefix_[n + offs_[i]];
        seen.insert(w);
      }
      record(seen.size());
    }
  }

  const FiniteWord& prefix_;
  int r_, k_;
  std::uint32_t W_;
  std::uint64_t N_, npos_;
  Mode mode_;
  Path path_ = Path::PlainGeneric;
  std::uint64_t maxkey_ = 0;
  std::vector<std::uint32_t> wpos_;
  std::vector<std::vector<std::uint32_t>> acc32_;
  std::vector<std::vector<std::uint64_t>> acc64_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> seen64_;
  std::vector<std::uint32_t> offs_;
  Best best_;
  int worker_ = 0, nworkers_ = 1;
  std::uint64_t budget_ = 0;
  std::uint64_t split_ = 0;
};

}  // namespace

ComplexityReport max_pattern_search(const FiniteWord& prefix, int r, int k,
                                    std::uint32_t W, std::uint64_t N, Mode mode,
                                    const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<std::uint32_t>(k) > W)
    throw std::invalid_argument("k must not exceed the window width");
  if (prefix.size() < N + W) throw InsufficientPrefix();
  const auto t0 = std::chrono::steady_clock::now();

  int nworkers = std::max(1, opts.workers);
  std::uint64_t per_worker = UINT64_MAX;
  if (opts.max_patterns) {
    per_worker = nworkers == 1 ? *opts.max_patterns
                               : (*opts.max_patterns + nworkers - 1) / nworkers;
  }

  std::vector<Best> results(static_cast<std::size_t>(nworkers));
  if (nworkers == 1) {
    Sweeper s(prefix, r, k, W, N, mode);
    results[0] = s.run(0, 1, per_worker);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < nworkers; ++w) {
      threads.emplace_back([&, w] {
        Sweeper s(prefix, r, k, W, N, mode);
        results[w] = s.run(w, nworkers, per_worker);
      });
    }
    for (auto& t : threads) t.join();
  }
  Best total;
  for (const auto& b : results) merge(total, b);

  ComplexityReport rep;
  rep.value = total.value;
  rep.witness = Pattern(total.witness);
  rep.window = W;
  rep.positions = N;
  rep.mode = mode;
  rep.status = "lower-bound-certified";
  rep.ceiling = opts.ceiling;
  rep.ceiling_exceeded = opts.ceiling && total.value > *opts.ceiling;
  rep.budget_exhausted = total.exhausted;
  rep.patterns_examined = total.examined;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

ComplexityReport max_pattern_search(const WordSpec& word, int k, std::uint32_t W,
                                    std::uint64_t N, Mode mode,
                                    const SearchOptions& opts) {
  FiniteWord pre = prefix(word, N + W);
  return max_pattern_search(pre, alphabet_size(word), k, W, N, mode, opts);
}

}  // namespace mpc
