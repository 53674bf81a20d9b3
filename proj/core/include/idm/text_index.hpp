#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "idm/common.hpp"
#include "idm/wavelet.hpp"

namespace idm {

/// Maximal repetition. `period` is the smallest period of T[start..end],
/// the fragment is at least twice that long, and neither endpoint can move
/// outward without breaking the period.
struct Run {
  int32_t start = 0;
  int32_t end = 0;
  int32_t period = 0;
  Fragment lyndon_root;    // one occurrence of the minimal rotation of the
                           // period-length prefix, inside the run
  int32_t root_offset = 0; // offset of `start` inside the root cycle
  int32_t root_id = -1;    // interned identity of the root string

  int32_t len() const { return end - start + 1; }
  double exponent() const { return double(len()) / double(period); }
};

/// Canonical form of a periodic fragment: head of length `head`, `reps`
/// full copies of the Lyndon root, then a tail of length `tail`.
/// Reconstructed length = head + reps * root_len + tail.
struct PeriodicRep {
  int32_t root_id = -1;
  int32_t root_len = 0;
  int32_t reps = 0;
  int32_t head = 0;
  int32_t tail = 0;
};

namespace detail {

/// Suffix array + inverse + LCP + range-minimum over LCP for O(1) lce.
/// Internal 0-based substrate; everything public goes through TextIndex.
class SuffixCore {
 public:
  SuffixCore() = default;
  explicit SuffixCore(std::string_view s, bool keep_only_rank = false);

  int32_t lce0(int32_t i, int32_t j) const;  // 0-based positions
  const std::vector<int32_t>& sa() const { return sa_; }
  const std::vector<int32_t>& rank() const { return rank_; }

 private:
  int32_t n_ = 0;
  std::vector<int32_t> sa_;
  std::vector<int32_t> rank_;
  std::vector<int32_t> lcp_;            // lcp_[x] = lcp(sa[x-1], sa[x])
  std::vector<std::vector<int32_t>> st_;  // sparse table of range minima
};

}  // namespace detail

/// Core text preprocessing: suffix order, longest common extensions in both
/// directions, the suffix tree with weighted-ancestor navigation, maximal
/// repetitions with interned Lyndon roots, and periodicity queries on
/// fragments. Immutable after construction.
class TextIndex {
 public:
  explicit TextIndex(Text text);

  const Text& text() const { return text_; }
  int32_t n() const { return text_.n(); }

  /// Longest common prefix of T[i..n] and T[j..n]; 1-based.
  int32_t lce(int32_t i, int32_t j) const;
  /// Longest common suffix of T[1..i] and T[1..j]; 1-based.
  int32_t lcs(int32_t i, int32_t j) const;

  const std::vector<int32_t>& sa() const { return fwd_.sa(); }
  const std::vector<int32_t>& sa_rank() const { return fwd_.rank(); }

  /// Suffix-array interval (0-based, inclusive) of the suffixes that start
  /// with T[start .. start+len-1]. len >= 1.
  std::pair<int32_t, int32_t> locus(int32_t start, int32_t len) const;

  /// Content identity of a fragment: equal strings get equal keys.
  uint64_t fragment_key(Fragment f) const;

  /// Occurrence primitives over the suffix order: positions of suffixes in
  /// the SA interval [lo, hi] that fall into [minPos, maxPos], and the
  /// smallest such position at or after `minPos`.
  int64_t occ_count(int32_t lo, int32_t hi, int32_t min_pos, int32_t max_pos) const;
  std::optional<int32_t> occ_successor(int32_t lo, int32_t hi, int32_t min_pos) const;

  const std::vector<Run>& runs() const { return runs_; }

  /// The unique run with per(run) = per(f) containing f, when f is periodic
  /// (smallest period at most |f|/2); absent otherwise.
  std::optional<Run> run_of(Fragment f) const;

  /// Offset o such that rotating f left by o is lexicographically smallest;
  /// ties resolve to the smallest o.
  int32_t minimal_rotation(Fragment f) const;

  /// Canonical (root, reps, head, tail) form of a periodic fragment.
  PeriodicRep periodic_rep(Fragment f) const;

  int32_t root_count() const { return static_cast<int32_t>(roots_.size()); }
  Fragment root_fragment(int32_t root_id) const { return roots_[root_id]; }
  int32_t root_len(int32_t root_id) const { return roots_[root_id].len(); }

 private:
  void build_suffix_tree();
  void build_runs();
  int32_t intern_root(Fragment root);
  void check_pos(int32_t pos) const;

  Text text_;
  detail::SuffixCore fwd_;
  detail::SuffixCore rev_;       // over the reversed text, for lcs
  std::vector<int32_t> flip_rank_;  // suffix ranks under the flipped alphabet

  // Suffix tree as parent/interval/depth arrays plus binary lifting.
  std::vector<int32_t> st_parent_;
  std::vector<int32_t> st_depth_;
  std::vector<int32_t> st_lo_, st_hi_;
  std::vector<int32_t> st_leaf_;         // SA slot x -> node of that leaf
  std::vector<std::vector<int32_t>> st_up_;

  WaveletTree occ_;  // SA values, for position-window tests

  std::vector<Run> runs_;
  std::vector<int32_t> stab_offsets_;  // CSR: runs covering each position,
  std::vector<int32_t> stab_runs_;     // sorted by period

  std::vector<Fragment> roots_;
  std::unordered_map<std::string, int32_t> root_ids_;
};

/// A text indexed in both directions. The reversed index serves mirrored
/// queries (extensions on the right end of a window).
struct MirroredText {
  explicit MirroredText(Text t) : fwd(std::move(t)), rev(fwd.text().reversed()) {}

  TextIndex fwd;
  TextIndex rev;

  int32_t n() const { return fwd.n(); }
  int32_t mirror(int32_t pos) const { return fwd.n() + 1 - pos; }
  Fragment mirror(Fragment f) const {
    if (f.empty()) return Fragment::empty_at(mirror(f.start) + 1);
    return Fragment(mirror(f.end), mirror(f.start));
  }
};

}  // namespace idm
