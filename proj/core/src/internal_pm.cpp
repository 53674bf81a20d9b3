#include "idm/internal_pm.hpp"

#include <algorithm>

namespace idm {

int32_t bounded_lcp(const TextIndex& ti, Fragment u, Fragment v) {
  if (u.empty() || !ti.text().in_range(u))
    throw std::invalid_argument("bounded_lcp: bad left fragment");
  if (!ti.text().in_range(v))
    throw std::invalid_argument("bounded_lcp: bad right fragment");
  if (v.empty()) return 0;
  int32_t kmax = std::min(u.len(), v.len());
  auto occurs = [&](int32_t k) {
    auto [lo, hi] = ti.locus(u.start, k);
    return ti.occ_count(lo, hi, v.start, v.end - k + 1) > 0;
  };
  int32_t lo = 0, hi = kmax;
  while (lo < hi) {
    int32_t mid = lo + (hi - lo + 1) / 2;
    if (occurs(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool exists(const TextIndex& ti, Fragment p, int32_t i, int32_t j) {
  if (p.empty() || !ti.text().in_range(p))
    throw std::invalid_argument("exists: bad pattern fragment");
  if (i < 1 || j > ti.n()) throw std::out_of_range("exists: window out of range");
  if (j - i + 1 < p.len()) return false;
  auto [lo, hi] = ti.locus(p.start, p.len());
  return ti.occ_count(lo, hi, i, j - p.len() + 1) > 0;
}

int64_t predecessor_count(std::span<const int32_t> lengths, int64_t bound) {
  return std::upper_bound(lengths.begin(), lengths.end(), bound) - lengths.begin();
}

}  // namespace idm
