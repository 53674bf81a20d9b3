#include "idm/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace idm {

PointSet2D::PointSet2D(std::vector<Point2D> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point2D& a, const Point2D& b) {
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });
  xs_.resize(pts.size());
  ys_sorted_.resize(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    xs_[i] = pts[i].x;
    ys_sorted_[i] = pts[i].y;
  }
  std::sort(ys_sorted_.begin(), ys_sorted_.end());
  ys_sorted_.erase(std::unique(ys_sorted_.begin(), ys_sorted_.end()),
                   ys_sorted_.end());
  std::vector<uint32_t> ranks(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    ranks[i] = static_cast<uint32_t>(
        std::lower_bound(ys_sorted_.begin(), ys_sorted_.end(), pts[i].y) -
        ys_sorted_.begin());
  wt_.build(std::move(ranks), static_cast<uint32_t>(ys_sorted_.size() + 1));
}

int64_t PointSet2D::count(const Rect& r) const {
  if (r.degenerate() || xs_.empty()) return 0;
  size_t l = std::lower_bound(xs_.begin(), xs_.end(), r.x1) - xs_.begin();
  size_t rr = std::upper_bound(xs_.begin(), xs_.end(), r.x2) - xs_.begin();
  if (l >= rr) return 0;
  int64_t ylo = std::lower_bound(ys_sorted_.begin(), ys_sorted_.end(), r.y1) -
                ys_sorted_.begin();
  int64_t yhi = std::upper_bound(ys_sorted_.begin(), ys_sorted_.end(), r.y2) -
                ys_sorted_.begin() - 1;
  return wt_.count_range(l, rr, ylo, yhi);
}

int64_t PointSet2D::count_union(std::span<const Rect> rects) const {
  std::vector<Rect> rs;
  for (const Rect& r : rects)
    if (!r.degenerate()) rs.push_back(r);
  if (rs.size() > 3) throw std::invalid_argument("count_union: more than 3 rectangles");
  int64_t total = 0;
  for (size_t i = 0; i < rs.size(); ++i) total += count(rs[i]);
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j)
      total -= count(rs[i].intersect(rs[j]));
  if (rs.size() == 3) total += count(rs[0].intersect(rs[1]).intersect(rs[2]));
  return total;
}

int64_t PointSet2D::bytes() const {
  return static_cast<int64_t>(xs_.capacity() * sizeof(int64_t) +
                              ys_sorted_.capacity() * sizeof(int64_t)) +
         static_cast<int64_t>(xs_.size()) * 5;  // packed wavelet levels
}

ColoredDominanceCounter::ColoredDominanceCounter(std::vector<ColoredPoint> pts) {
  npoints_ = static_cast<int64_t>(pts.size());
  arena_.push_back(Node{});  // null
  roots_.push_back(0);
  if (pts.empty()) return;

  ys_.resize(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) ys_[i] = pts[i].y;
  std::sort(ys_.begin(), ys_.end());
  ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());

  int32_t ncolors = 0;
  for (const ColoredPoint& p : pts) ncolors = std::max(ncolors, p.color + 1);
  std::vector<int32_t> best(ncolors, -1);  // current min y rank per color

  std::sort(pts.begin(), pts.end(), [](const ColoredPoint& a, const ColoredPoint& b) {
    return a.x > b.x;
  });

  const int32_t U = static_cast<int32_t>(ys_.size());
  size_t i = 0;
  int32_t root = 0;
  while (i < pts.size()) {
    int64_t x = pts[i].x;
    for (; i < pts.size() && pts[i].x == x; ++i) {
      int32_t yr = static_cast<int32_t>(
          std::lower_bound(ys_.begin(), ys_.end(), pts[i].y) - ys_.begin());
      int32_t& cur = best[pts[i].color];
      if (cur >= 0 && cur <= yr) continue;
      if (cur >= 0) root = update(root, 0, U, cur, -1);
      root = update(root, 0, U, yr, +1);
      cur = yr;
    }
    xs_desc_.push_back(x);
    roots_.push_back(root);
  }
}

int32_t ColoredDominanceCounter::update(int32_t node, int32_t lo, int32_t hi,
                                        int32_t pos, int32_t delta) {
  int32_t fresh = static_cast<int32_t>(arena_.size());
  arena_.push_back(arena_[node]);
  arena_[fresh].cnt += delta;
  if (hi - lo > 1) {
    int32_t mid = lo + (hi - lo) / 2;
    if (pos < mid) {
      int32_t child = update(arena_[fresh].l, lo, mid, pos, delta);
      arena_[fresh].l = child;
    } else {
      int32_t child = update(arena_[fresh].r, mid, hi, pos, delta);
      arena_[fresh].r = child;
    }
  }
  return fresh;
}

int64_t ColoredDominanceCounter::prefix(int32_t node, int32_t lo, int32_t hi,
                                        int32_t k) const {
  if (node == 0 || k <= lo) return 0;
  if (k >= hi) return arena_[node].cnt;
  int32_t mid = lo + (hi - lo) / 2;
  return prefix(arena_[node].l, lo, mid, k) + prefix(arena_[node].r, mid, hi, k);
}

int64_t ColoredDominanceCounter::count(int64_t qx, int64_t qy) const {
  if (npoints_ == 0) return 0;
  // Number of sweep steps whose x is >= qx.
  size_t ver = std::upper_bound(xs_desc_.begin(), xs_desc_.end(), qx,
                                std::greater<int64_t>()) -
               xs_desc_.begin();
  if (ver == 0) return 0;
  int32_t k = static_cast<int32_t>(
      std::upper_bound(ys_.begin(), ys_.end(), qy) - ys_.begin());
  return prefix(roots_[ver], 0, static_cast<int32_t>(ys_.size()), k);
}

int64_t ColoredDominanceCounter::bytes() const {
  return static_cast<int64_t>(arena_.capacity() * sizeof(Node) +
                              xs_desc_.capacity() * sizeof(int64_t) +
                              roots_.capacity() * sizeof(int32_t) +
                              ys_.capacity() * sizeof(int64_t));
}

ColoredPointSet::ColoredPointSet(const std::vector<ColoredPoint>& pts) {
  npoints_ = static_cast<int64_t>(pts.size());
  for (int fx = 0; fx < 2; ++fx)
    for (int fy = 0; fy < 2; ++fy) {
      std::vector<ColoredPoint> t(pts);
      for (ColoredPoint& p : t) {
        if (fx) p.x = -p.x;
        if (fy) p.y = -p.y;
      }
      counters_[fx][fy] = ColoredDominanceCounter(std::move(t));
    }
}

int64_t ColoredPointSet::color_count(const Quadrant& q) const {
  // The base counter answers (x >= qx, y <= qy); flip axes to match.
  int fx = q.x.upper ? 1 : 0;
  int fy = q.y.upper ? 0 : 1;
  int64_t qx = fx ? -q.x.value : q.x.value;
  int64_t qy = fy ? -q.y.value : q.y.value;
  return counters_[fx][fy].count(qx, qy);
}

DynamicPointSet2D::DynamicPointSet2D(std::vector<Point2D> pts) {
  for (const Point2D& p : pts) live_.emplace(p.x, p.y);
  if (!pts.empty()) {
    ins_.push_back(std::move(pts));
    ins_ps_.emplace_back(ins_.back());
  }
}

void DynamicPointSet2D::push(std::vector<std::vector<Point2D>>& side,
                             std::vector<Point2D> pts) {
  // Keep block sizes strictly decreasing toward the back; merge on ties so
  // each point takes part in O(log) merges.
  side.push_back(std::move(pts));
  while (side.size() >= 2 &&
         side[side.size() - 2].size() <= side.back().size()) {
    auto top = std::move(side.back());
    side.pop_back();
    auto& below = side.back();
    below.insert(below.end(), top.begin(), top.end());
  }
}

void DynamicPointSet2D::rebuild_structs() {
  // Rebuild only structures whose block changed (suffix of the list).
  auto sync = [](const std::vector<std::vector<Point2D>>& blocks,
                 std::vector<PointSet2D>& structs) {
    size_t keep = 0;
    while (keep < structs.size() && keep < blocks.size() &&
           structs[keep].size() == static_cast<int64_t>(blocks[keep].size()))
      ++keep;
    structs.resize(keep);
    for (size_t i = keep; i < blocks.size(); ++i) structs.emplace_back(blocks[i]);
  };
  sync(ins_, ins_ps_);
  sync(del_, del_ps_);
}

void DynamicPointSet2D::insert(Point2D p) {
  live_.emplace(p.x, p.y);
  push(ins_, {p});
  compact_if_needed();
  rebuild_structs();
}

void DynamicPointSet2D::erase(Point2D p) {
  auto it = live_.find({p.x, p.y});
  if (it == live_.end())
    throw std::invalid_argument("DynamicPointSet2D: deleting an absent point");
  live_.erase(it);
  push(del_, {p});
  ++del_total_;
  compact_if_needed();
  rebuild_structs();
}

void DynamicPointSet2D::compact_if_needed() {
  int64_t ins_total = 0;
  for (const auto& blk : ins_) ins_total += static_cast<int64_t>(blk.size());
  if (del_total_ == 0 || del_total_ * 2 < ins_total) return;
  std::vector<Point2D> all;
  all.reserve(live_.size());
  for (const auto& [x, y] : live_) all.push_back({x, y});
  ins_.clear();
  del_.clear();
  ins_ps_.clear();
  del_ps_.clear();
  del_total_ = 0;
  if (!all.empty()) ins_.push_back(std::move(all));
}

int64_t DynamicPointSet2D::count(const Rect& r) const {
  int64_t total = 0;
  for (const auto& ps : ins_ps_) total += ps.count(r);
  for (const auto& ps : del_ps_) total -= ps.count(r);
  return total;
}

}  // namespace idm
