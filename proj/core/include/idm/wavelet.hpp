#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idm/common.hpp"

namespace idm {

/// Static wavelet tree over a sequence of values in [0, universe).
/// Supports counting values below a threshold inside an index range and
/// range-successor lookups, both in O(log universe).
class WaveletTree {
 public:
  WaveletTree() = default;
  explicit WaveletTree(std::vector<uint32_t> data, uint32_t universe = 0) {
    build(std::move(data), universe);
  }

  void build(std::vector<uint32_t> data, uint32_t universe = 0) {
    n_ = data.size();
    if (universe == 0) {
      for (uint32_t v : data) universe = v >= universe ? v + 1 : universe;
    }
    bits_ = 0;
    while ((1ull << bits_) < universe) ++bits_;
    universe_ = 1ull << bits_;
    levels_.assign(bits_, Level{});
    std::vector<uint32_t> cur = std::move(data);
    std::vector<uint32_t> next(n_);
    for (uint32_t lv = 0; lv < bits_; ++lv) {
      uint32_t bit = bits_ - 1 - lv;
      Level& L = levels_[lv];
      L.words.assign(n_ / 64 + 1, 0);
      L.rank.assign(n_ / 64 + 2, 0);
      size_t zeros = 0;
      for (size_t i = 0; i < n_; ++i) {
        if ((cur[i] >> bit) & 1u) {
          L.words[i >> 6] |= 1ull << (i & 63);
        } else {
          ++zeros;
        }
      }
      uint32_t acc = 0;
      for (size_t w = 0; w < L.words.size(); ++w) {
        L.rank[w] = acc;
        acc += static_cast<uint32_t>(__builtin_popcountll(L.words[w]));
      }
      L.rank[L.words.size()] = acc;
      L.zeros = zeros;
      size_t z = 0, o = zeros;
      for (size_t i = 0; i < n_; ++i) {
        if ((cur[i] >> bit) & 1u) {
          next[o++] = cur[i];
        } else {
          next[z++] = cur[i];
        }
      }
      cur.swap(next);
    }
  }

  size_t size() const { return n_; }

  /// Number of values strictly below `v` among positions [l, r).
  int64_t count_less(size_t l, size_t r, uint64_t v) const {
    if (l >= r) return 0;
    if (v >= universe_) return static_cast<int64_t>(r - l);
    int64_t out = 0;
    for (uint32_t lv = 0; lv < bits_ && l < r; ++lv) {
      uint32_t bit = bits_ - 1 - lv;
      const Level& L = levels_[lv];
      size_t l1 = rank1(L, l), r1 = rank1(L, r);
      if ((v >> bit) & 1u) {
        out += static_cast<int64_t>((r - l) - (r1 - l1));
        l = L.zeros + l1;
        r = L.zeros + r1;
      } else {
        l = l - l1;
        r = r - r1;
      }
    }
    return out;
  }

  /// Number of values in [vlo, vhi] among positions [l, r).
  int64_t count_range(size_t l, size_t r, int64_t vlo, int64_t vhi) const {
    if (l >= r || vlo > vhi) return 0;
    uint64_t lo = vlo < 0 ? 0 : static_cast<uint64_t>(vlo);
    if (vhi < 0) return 0;
    uint64_t hi = static_cast<uint64_t>(vhi);
    return count_less(l, r, hi >= universe_ ? universe_ : hi + 1) -
           (lo == 0 ? 0 : count_less(l, r, lo));
  }

  /// Smallest value >= q among positions [l, r), if any.
  std::optional<uint32_t> successor(size_t l, size_t r, uint32_t q) const {
    if (l >= r || q >= universe_) return std::nullopt;
    return succ_rec(0, l, r, 0, q);
  }

 private:
  struct Level {
    std::vector<uint64_t> words;
    std::vector<uint32_t> rank;
    size_t zeros = 0;
  };

  size_t rank1(const Level& L, size_t pos) const {
    size_t w = pos >> 6;
    uint64_t mask = (pos & 63) ? ((1ull << (pos & 63)) - 1) : 0;
    return L.rank[w] + static_cast<size_t>(__builtin_popcountll(L.words[w] & mask));
  }

  std::optional<uint32_t> succ_rec(uint32_t lv, size_t l, size_t r,
                                   uint32_t prefix, uint32_t q) const {
    if (l >= r) return std::nullopt;
    if (lv == bits_) return prefix >= q ? std::optional<uint32_t>(prefix) : std::nullopt;
    uint32_t bit = bits_ - 1 - lv;
    // Values under this node span [prefix, prefix + 2^(bits-lv)).
    uint64_t span = 1ull << (bits_ - lv);
    if (static_cast<uint64_t>(prefix) + span <= q) return std::nullopt;
    const Level& L = levels_[lv];
    size_t l1 = rank1(L, l), r1 = rank1(L, r);
    size_t l0 = l - l1, r0 = r - r1;
    // The zero child can hold values >= q unless q's own path forces the
    // one child (possible only while the prefix still tracks q).
    if (prefix >= q || !((q >> bit) & 1u)) {
      if (auto res = succ_rec(lv + 1, l0, r0, prefix, q)) return res;
    }
    return succ_rec(lv + 1, L.zeros + l1, L.zeros + r1, prefix | (1u << bit), q);
  }

  size_t n_ = 0;
  uint32_t bits_ = 0;
  uint64_t universe_ = 1;
  std::vector<Level> levels_;
};

}  // namespace idm
