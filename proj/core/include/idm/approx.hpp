#pragma once

#include <memory>
#include <unordered_map>

#include "idm/count_occ.hpp"
#include "idm/dmod_tree.hpp"
#include "idm/geometry.hpp"
#include "idm/internal_pm.hpp"

namespace idm {

/// Patterns split by high periodicity: a pattern is highly periodic when its
/// smallest period is at most a quarter of its length. The highly periodic
/// side carries the canonical root form of each pattern.
struct HpPartition {
  std::vector<int32_t> hp_ids;
  std::vector<PeriodicRep> hp_reps;  // parallel to hp_ids
  std::vector<int32_t> non_hp_ids;
};

HpPartition partition_by_periodicity(const TextIndex& ti, const Dictionary& dict);

/// Single-step CountDistinct deltas: the number of patterns whose only
/// occurrence in a window touches the window end being moved. The left end
/// is served by the forward tree, the right end by the same construction
/// over the reversed text.
class DeltaEngine {
 public:
  DeltaEngine(const MirroredText& mt, Dictionary dict);

  const MirroredText& mirrored() const { return *mt_; }
  const Dictionary& dict() const { return dict_; }
  const DModTree& fwd_tree() const { return fwd_; }
  const DModTree& rev_tree() const { return rev_; }

  /// Patterns whose only occurrence in [l..r] starts at l.
  int64_t delta_only_at_left(int32_t l, int32_t r) const;
  /// Patterns whose only occurrence in [l..r] ends at r.
  int64_t delta_only_at_right(int32_t l, int32_t r) const;

  int64_t pattern_prefix_count(int32_t pos, int32_t len) const {
    return fwd_.pattern_prefix_count(pos, len);
  }

 private:
  const MirroredText* mt_;
  Dictionary dict_;
  Dictionary rev_dict_;  // mirrored fragments; identities stay aligned
  DModTree fwd_;
  DModTree rev_;
};

/// Exact CountDistinct values for every window whose length is a basic
/// length floor((10/9)^p), deduplicated. Built with a sliding window: one
/// right-extension delta and one left-contraction delta per step.
class BasicFragmentTable {
 public:
  BasicFragmentTable() = default;
  explicit BasicFragmentTable(const DeltaEngine& eng);

  int32_t length_count() const { return static_cast<int32_t>(lengths_.size()); }
  int32_t length_at(int32_t t) const { return lengths_[t]; }
  /// Index of the largest basic length <= len (len >= 1).
  int32_t index_of_largest_leq(int32_t len) const { return prev_idx_[len]; }
  bool is_basic(int32_t len) const {
    return len >= 1 && len <= n_ && lengths_[prev_idx_[len]] == len;
  }
  int64_t count_at(int32_t start, int32_t t) const {
    return counts_[row_off_[t] + start - 1];
  }

  /// Shifts every stored count by the contribution of a delta dictionary:
  /// +1 sign for inserted patterns, -1 for deleted ones.
  void apply_correction(const DeltaEngine& delta_eng, int32_t sign);

  int64_t bytes() const {
    return static_cast<int64_t>(counts_.capacity()) * sizeof(uint32_t);
  }

 private:
  int32_t n_ = 0;
  std::vector<int32_t> lengths_;
  std::vector<int32_t> prev_idx_;  // len (1..n) -> index into lengths_
  std::vector<size_t> row_off_;
  std::vector<uint32_t> counts_;
};

/// Grids of highly periodic patterns keyed by Lyndon root and rank; points
/// are (head, tail) pairs. Supports counting the distinct highly periodic
/// patterns occurring in one periodic fragment or in a union of two with a
/// shared root.
class HpGrids {
 public:
  HpGrids() = default;
  explicit HpGrids(const HpPartition& part);

  bool empty() const { return total_ == 0; }
  int64_t total_points() const { return total_; }

  int64_t periodic_count(const PeriodicRep& u) const;
  int64_t periodic_union_count(const PeriodicRep& u1, const PeriodicRep& u2) const;

 private:
  const PointSet2D* grid(int32_t root, int32_t rank) const;
  int64_t x_prefix(int32_t root, int32_t rank) const;

  int64_t total_ = 0;
  std::unordered_map<int64_t, PointSet2D> grids_;
  std::unordered_map<int32_t, std::vector<int64_t>> x_;  // root -> counts by rank
};

struct ApproxOptions {
  int64_t max_occ = 10'000'000;
};

/// Result of one approximate query. When the window was answered through the
/// basic-prefix/basic-suffix split, `split` is set and i_prime/j_prime are
/// the inner endpoints of the two stored basic factors [i..i'] and [j'..j];
/// otherwise the value is exact.
struct ApproxAnswer {
  int64_t value = 0;
  bool split = false;
  int32_t i_prime = 0;
  int32_t j_prime = 0;
};

/// 2-approximate CountDistinct: stored exact counts for basic windows plus a
/// three-fragment correction for everything else. Any answer v satisfies
/// true <= v <= 2 * true.
class ApproxIndex {
 public:
  ApproxIndex(const MirroredText& mt, Dictionary dict, ApproxOptions opt = {});
  ApproxIndex(const MirroredText& mt, Dictionary dict, ApproxOptions opt,
              BasicFragmentTable precomputed_table);

  int64_t count_distinct(int32_t i, int32_t j) const { return query(i, j).value; }
  ApproxAnswer query(int32_t i, int32_t j) const;

  /// Distinct patterns with an occurrence starting in f1 and ending in f3
  /// that occur in neither f1f2 nor f2f3. The fragments are consecutive,
  /// |f1| = |f3| and |f2| >= 8 |f1|.
  int64_t three_fragments_count(Fragment f1, Fragment f2, Fragment f3) const;

  int64_t periodic_count(Fragment u) const;
  int64_t periodic_union_count(Fragment u1, Fragment u2) const;

  const DeltaEngine& engine() const { return eng_; }
  const Dictionary& dict() const { return eng_.dict(); }
  const BasicFragmentTable& basic_table() const { return table_; }
  const HpPartition& partition() const { return part_; }
  const HpGrids& grids() const { return grids_; }
  const CountOccIndex& non_hp_count() const { return count_non_hp_; }

 private:
  int64_t exists_scan(int32_t i, int32_t j) const;

  const MirroredText* mt_;
  DeltaEngine eng_;
  HpPartition part_;
  HpGrids grids_;
  CountOccIndex count_non_hp_;
  BasicFragmentTable table_;
};

}  // namespace idm
