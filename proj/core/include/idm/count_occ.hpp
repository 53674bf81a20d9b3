#pragma once

#include "idm/dmod_tree.hpp"
#include "idm/geometry.hpp"

namespace idm {

/// Count(i, j): occurrences of dictionary patterns inside T[i..j], counted
/// with multiplicity. Materializes one 2D point per occurrence, so the
/// footprint is the occurrence count; a configurable cap rejects builds that
/// would exceed it.
class CountOccIndex {
 public:
  CountOccIndex() = default;
  CountOccIndex(const TextIndex& ti, const Dictionary& dict, int64_t max_occ);
  CountOccIndex(const TextIndex& ti, const Dictionary& dict,
                const std::vector<int32_t>& pattern_ids, int64_t max_occ);

  int64_t count(int32_t i, int32_t j) const;
  int64_t count(Fragment w) const { return count(w.start, w.end); }
  int64_t occurrences() const { return points_.size(); }
  int64_t bytes() const { return points_.bytes(); }

 private:
  PointSet2D points_;
};

}  // namespace idm
