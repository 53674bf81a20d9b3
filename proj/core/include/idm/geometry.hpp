#pragma once

#include <memory>
#include <set>
#include <span>
#include <vector>

#include "idm/common.hpp"
#include "idm/wavelet.hpp"

namespace idm {

struct Point2D {
  int64_t x = 0;
  int64_t y = 0;
  bool operator==(const Point2D&) const = default;
};

struct ColoredPoint {
  int64_t x = 0;
  int64_t y = 0;
  int32_t color = 0;
};

/// One side of a quarterplane: either (-inf, value] or [value, +inf).
struct Bound {
  int64_t value = 0;
  bool upper = true;  // true: (-inf, value]
};

struct Quadrant {
  Bound x;
  Bound y;
};

/// Frozen set of integer points with multiplicities; rectangle counting in
/// O(log n) via a wavelet tree over y ranks in x order.
class PointSet2D {
 public:
  PointSet2D() = default;
  explicit PointSet2D(std::vector<Point2D> pts);

  int64_t size() const { return static_cast<int64_t>(xs_.size()); }
  int64_t count(const Rect& r) const;

  /// Points covered by the union of at most three rectangles, each counted
  /// once (inclusion-exclusion over the pairwise and triple intersections).
  int64_t count_union(std::span<const Rect> rects) const;

  int64_t bytes() const;

 private:
  std::vector<int64_t> xs_;        // sorted x of every point
  std::vector<int64_t> ys_sorted_; // distinct y values, sorted
  WaveletTree wt_;                 // y ranks in x order
};

/// Distinct-color counting over one quadrant orientation (x >= qx, y <= qy).
/// A descending sweep over x feeds a persistent prefix-count tree keyed by
/// the smallest y each color has seen so far; a query binds the sweep
/// position by qx and counts stored values <= qy.
class ColoredDominanceCounter {
 public:
  ColoredDominanceCounter() = default;
  explicit ColoredDominanceCounter(std::vector<ColoredPoint> pts);

  int64_t count(int64_t qx, int64_t qy) const;
  int64_t size() const { return npoints_; }
  int64_t bytes() const;

 private:
  struct Node {
    int32_t l = 0, r = 0;
    int32_t cnt = 0;
  };
  int32_t update(int32_t node, int32_t lo, int32_t hi, int32_t pos, int32_t delta);
  int64_t prefix(int32_t node, int32_t lo, int32_t hi, int32_t k) const;

  int64_t npoints_ = 0;
  std::vector<int64_t> xs_desc_;   // distinct x, descending
  std::vector<int32_t> roots_;     // version after each sweep step
  std::vector<int64_t> ys_;        // distinct y values, sorted
  std::vector<Node> arena_;
};

/// Colored point set supporting distinct-color counting over any of the four
/// quarterplane orientations. All four sweeps are built eagerly.
class ColoredPointSet {
 public:
  ColoredPointSet() = default;
  explicit ColoredPointSet(const std::vector<ColoredPoint>& pts);

  int64_t color_count(const Quadrant& q) const;
  int64_t size() const { return npoints_; }

 private:
  int64_t npoints_ = 0;
  ColoredDominanceCounter counters_[2][2];  // [x flipped][y flipped]
};

/// CountDistinct over special occurrences: one colored point per stored
/// occurrence (start, end), one color per pattern; a query counts distinct
/// patterns with a stored occurrence inside [i, j].
class CountDistinctSpecial {
 public:
  CountDistinctSpecial() = default;
  explicit CountDistinctSpecial(std::vector<ColoredPoint> occurrences)
      : counter_(std::move(occurrences)) {}

  int64_t count(int32_t i, int32_t j) const {
    if (j < i) return 0;
    return counter_.count(i, j);
  }
  int64_t size() const { return counter_.size(); }
  int64_t bytes() const { return counter_.bytes(); }

 private:
  ColoredDominanceCounter counter_;
};

/// Multiset of 2D points under insertions and deletions, with rectangle
/// counting. Logarithmic rebuilding over static blocks; deletions go to a
/// shadow side subtracted from counts, with periodic compaction.
class DynamicPointSet2D {
 public:
  DynamicPointSet2D() = default;
  explicit DynamicPointSet2D(std::vector<Point2D> pts);

  void insert(Point2D p);
  void erase(Point2D p);  // deleting an absent point is rejected
  int64_t count(const Rect& r) const;
  int64_t size() const { return static_cast<int64_t>(live_.size()); }

 private:
  static void push(std::vector<std::vector<Point2D>>& side, std::vector<Point2D> pts);
  void compact_if_needed();
  void rebuild_structs();

  std::multiset<std::pair<int64_t, int64_t>> live_;
  std::vector<std::vector<Point2D>> ins_, del_;
  std::vector<PointSet2D> ins_ps_, del_ps_;
  int64_t del_total_ = 0;
};

}  // namespace idm
