#pragma once

#include <map>
#include <memory>
#include <unordered_set>

#include "idm/approx.hpp"

namespace idm {

/// Dictionary updates over the 2-approximate counter: pending insertions and
/// deletions are replayed per query through single-pattern occurrence tests,
/// and the static structures are rebuilt after every k effective updates.
/// The 2-approximation bound holds against the current dictionary at any
/// point of the schedule.
class DynamicIndex {
 public:
  DynamicIndex(const MirroredText& mt, const std::vector<Fragment>& initial,
               int32_t k, ApproxOptions opt = {});

  /// No-op when the pattern is already a member.
  void insert_pattern(Fragment f);
  /// Deleting a non-member is rejected.
  void delete_pattern(Fragment f);

  int64_t count_distinct(int32_t i, int32_t j) const;

  /// Folds the pending updates into the static structures. The basic-window
  /// table is corrected in place from the two delta dictionaries; the rest
  /// is reconstructed for the new dictionary.
  void rebuild();

  const ApproxIndex& base() const { return *base_; }
  std::vector<Fragment> current_dictionary() const;
  int32_t pending_updates() const { return updates_; }
  int64_t rebuild_count() const { return rebuilds_; }

 private:
  void reset_keys();

  const MirroredText* mt_;
  ApproxOptions opt_;
  int32_t k_;
  std::unique_ptr<ApproxIndex> base_;
  std::unordered_set<uint64_t> base_keys_;
  std::map<uint64_t, Fragment> ins_, del_;
  int32_t updates_ = 0;
  int64_t rebuilds_ = 0;
};

}  // namespace idm
