#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idm/text_index.hpp"

namespace idm {

/// An internal dictionary: patterns given as fragments of the indexed text,
/// collapsed by string content (duplicates map to one pattern identity).
/// The empty string is never a pattern.
class Dictionary {
 public:
  Dictionary() = default;
  Dictionary(const TextIndex& ti, const std::vector<Fragment>& fragments);

  int32_t size() const { return static_cast<int32_t>(patterns_.size()); }
  const std::vector<Fragment>& patterns() const { return patterns_; }
  Fragment pattern(int32_t id) const { return patterns_[id]; }
  int32_t length(int32_t id) const { return patterns_[id].len(); }

 private:
  std::vector<Fragment> patterns_;  // one witness fragment per identity
};

/// Trie of the dictionary patterns and all text suffixes with every
/// non-terminal node contracted away: each node other than the root is a
/// pattern, a suffix, or both. Nodes are stored in preorder.
class DModTree {
 public:
  DModTree(const TextIndex& ti, const Dictionary& dict);

  int32_t node_count() const { return static_cast<int32_t>(parent_.size()); }
  int32_t root() const { return 0; }
  int32_t parent(int32_t v) const { return parent_[v]; }
  int32_t weight(int32_t v) const { return weight_[v]; }
  bool is_pattern(int32_t v) const { return pattern_id_[v] >= 0; }
  int32_t pattern_id(int32_t v) const { return pattern_id_[v]; }
  int32_t suffix_label(int32_t v) const { return suffix_label_[v]; }
  int32_t pattern_anc_count(int32_t v) const { return cnt_[v]; }
  int32_t nearest_pattern_anc(int32_t v) const { return nearest_pat_[v]; }
  std::span<const int32_t> children(int32_t v) const;
  int32_t leaf_of_suffix(int32_t pos) const { return leaf_of_[pos]; }
  int32_t node_of_pattern(int32_t pid) const { return pattern_node_[pid]; }
  std::pair<int32_t, int32_t> sa_interval(int32_t v) const {
    return {lo_[v], hi_[v]};
  }

  /// Top-most ancestor of v whose weight is at least `depth`.
  int32_t weighted_ancestor(int32_t v, int32_t depth) const;

  /// Number of distinct patterns that are prefixes of T[pos .. pos+len-1].
  int64_t pattern_prefix_count(int32_t pos, int32_t len) const;

  /// Longest pattern that is a prefix of T[l..r]: (pattern id, length).
  std::optional<std::pair<int32_t, int32_t>> pref_d(int32_t l, int32_t r) const;

  /// All starting positions of the pattern in the text, ascending.
  std::vector<int32_t> occurrences_of(int32_t pid) const;

  /// Every occurrence of every pattern, grouped by pattern identity.
  std::vector<std::pair<int32_t, Fragment>> enumerate_occurrences() const;

  int64_t occurrence_total() const;

  const Dictionary& dict() const { return dict_; }

 private:
  const TextIndex* ti_;
  Dictionary dict_;

  std::vector<int32_t> parent_, weight_, lo_, hi_;
  std::vector<int32_t> pattern_id_, suffix_label_;
  std::vector<int32_t> cnt_, nearest_pat_;
  std::vector<int32_t> child_off_, child_;
  std::vector<int32_t> leaf_of_;      // suffix position -> node
  std::vector<int32_t> pattern_node_; // pattern id -> node
  std::vector<std::vector<int32_t>> up_;
};

}  // namespace idm
