#include "idm/count_occ.hpp"

#include <numeric>

namespace idm {

namespace {

std::vector<int32_t> all_ids(const Dictionary& dict) {
  std::vector<int32_t> ids(dict.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

CountOccIndex::CountOccIndex(const TextIndex& ti, const Dictionary& dict,
                             int64_t max_occ)
    : CountOccIndex(ti, dict, all_ids(dict), max_occ) {}

CountOccIndex::CountOccIndex(const TextIndex& ti, const Dictionary& dict,
                             const std::vector<int32_t>& pattern_ids,
                             int64_t max_occ) {
  int64_t total = 0;
  std::vector<std::pair<std::pair<int32_t, int32_t>, int32_t>> loci;
  loci.reserve(pattern_ids.size());
  for (int32_t pid : pattern_ids) {
    Fragment f = dict.pattern(pid);
    auto iv = ti.locus(f.start, f.len());
    total += iv.second - iv.first + 1;
    if (total > max_occ)
      throw build_limit_error("CountOccIndex: occurrence cap exceeded", max_occ,
                              total);
    loci.push_back({iv, f.len()});
  }
  std::vector<Point2D> pts;
  pts.reserve(total);
  const auto& sa = ti.sa();
  for (auto& [iv, len] : loci)
    for (int32_t x = iv.first; x <= iv.second; ++x) {
      int64_t a = sa[x] + 1;
      pts.push_back({a, a + len - 1});
    }
  points_ = PointSet2D(std::move(pts));
}

int64_t CountOccIndex::count(int32_t i, int32_t j) const {
  if (j < i) return 0;
  return points_.count(Rect{i, kPosInf, kNegInf, j});
}

}  // namespace idm
