#pragma once

#include <memory>

#include "idm/approx.hpp"

namespace idm {

/// Exact CountDistinct through a grid of precomputed canonical windows
/// T[c1*m+1 .. c2*m]; a query starts from the largest canonical window
/// inside [i, j] and applies at most 2(m-1) single-step extension deltas.
class CanonicalIndex {
 public:
  CanonicalIndex(std::shared_ptr<const DeltaEngine> eng, int32_t m);

  int64_t count_distinct(int32_t i, int32_t j) const;
  int32_t m() const { return m_; }
  int64_t table_entries() const { return static_cast<int64_t>(table_.size()); }
  int64_t table_bytes() const {
    return static_cast<int64_t>(table_.size()) * sizeof(uint32_t);
  }
  /// Stored count for the canonical window (c1*m+1, c2*m).
  int64_t table_value(int32_t c1, int32_t c2) const;

 private:
  std::shared_ptr<const DeltaEngine> eng_;
  int32_t m_ = 1;
  int32_t rows_ = 0;  // canonical starts: c1 in [0, rows_)
  int32_t cmax_ = 0;  // canonical ends:   c2 in [1, cmax_]
  std::vector<size_t> row_off_;
  std::vector<uint32_t> table_;
};

/// Prefix chain of patterns: every member is a prefix of the longest one.
struct PathSet {
  std::vector<int32_t> ids;      // by increasing length
  std::vector<int32_t> lengths;  // sorted ascending
  Fragment longest;
};

struct PathDecomposition {
  int32_t k = 1;
  std::vector<PathSet> sets;           // pairwise disjoint, each of size >= k
  std::vector<int32_t> remainder_ids;  // patterns in no extracted set
};

/// Greedy preorder extraction of disjoint prefix chains of size >= k; after
/// removal the remainder holds no chain longer than k.
PathDecomposition decompose_path_sets(const DModTree& tree, int32_t k);

/// Exact CountDistinct through the path-set decomposition with k = ceil(d/m):
/// extracted chains answer by one bounded-LCP plus a predecessor lookup; the
/// remainder answers by distinct-color counting over all its occurrences.
class PathSetIndex {
 public:
  PathSetIndex(std::shared_ptr<const DeltaEngine> eng, int32_t m,
               int64_t max_occ = 10'000'000);

  int64_t count_distinct(int32_t i, int32_t j) const;
  const PathDecomposition& decomposition() const { return decomp_; }
  int64_t special_occurrences() const { return special_.size(); }
  int64_t bytes() const { return special_.bytes(); }

 private:
  std::shared_ptr<const DeltaEngine> eng_;
  PathDecomposition decomp_;
  CountDistinctSpecial special_;
};

}  // namespace idm
