#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "idm/geometry.hpp"

using namespace idm;
using testutil::Rng;

namespace {

int64_t scan(const std::vector<Point2D>& pts, const Rect& r) {
  int64_t c = 0;
  for (const Point2D& p : pts)
    if (p.x >= r.x1 && p.x <= r.x2 && p.y >= r.y1 && p.y <= r.y2) ++c;
  return c;
}

Rect random_rect(Rng& rng, int64_t lo, int64_t hi) {
  Rect r;
  auto pick = [&](int64_t& a, int64_t& b) {
    a = rng.ri((int32_t)lo, (int32_t)hi);
    b = rng.ri((int32_t)lo, (int32_t)hi);
    if (a > b) std::swap(a, b);
    if (rng.ri(0, 7) == 0) a = kNegInf;
    if (rng.ri(0, 7) == 0) b = kPosInf;
  };
  pick(r.x1, r.x2);
  pick(r.y1, r.y2);
  return r;
}

}  // namespace

TEST_CASE("rectangle counting fixtures") {
  PointSet2D ps({{1, 1}, {2, 3}});
  CHECK(ps.count(Rect{1, 2, 1, 2}) == 1);
  CHECK(ps.count(Rect{}) == 2);  // full plane
  CHECK(PointSet2D(std::vector<Point2D>{}).count(Rect{}) == 0);
}

TEST_CASE("rectangle counting matches scans with multiplicities") {
  Rng rng(0x2D);
  for (int trial = 0; trial < 400; ++trial) {
    int n = rng.ri(0, 200);
    std::vector<Point2D> pts(n);
    for (auto& p : pts) {
      p.x = rng.ri(-20, 20);
      p.y = rng.ri(-20, 20);
    }
    PointSet2D ps(pts);
    for (int q = 0; q < 12; ++q) {
      Rect r = random_rect(rng, -25, 25);
      CHECK(ps.count(r) == scan(pts, r));
    }
  }
}

TEST_CASE("union of up to three rectangles") {
  std::vector<Point2D> pts{{1, 1}, {2, 2}, {3, 3}};
  PointSet2D ps(pts);
  Rect a{1, 1, 1, 1}, b{3, 3, 3, 3};
  Rect both[2] = {a, b};
  CHECK(ps.count_union(both) == 2);  // disjoint: sum
  Rect same[2] = {a, a};
  CHECK(ps.count_union(same) == 1);  // idempotent
  Rect overlap[2] = {Rect{1, 2, 1, 2}, Rect{2, 3, 2, 3}};
  CHECK(ps.count_union(overlap) == 3);

  Rng rng(0x3E);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.ri(0, 80);
    std::vector<Point2D> rpts(n);
    for (auto& p : rpts) {
      p.x = rng.ri(-10, 10);
      p.y = rng.ri(-10, 10);
    }
    PointSet2D rps(rpts);
    Rect rects[3] = {random_rect(rng, -12, 12), random_rect(rng, -12, 12),
                     random_rect(rng, -12, 12)};
    int64_t want = 0;
    for (const Point2D& p : rpts) {
      bool in = false;
      for (const Rect& r : rects)
        in |= p.x >= r.x1 && p.x <= r.x2 && p.y >= r.y1 && p.y <= r.y2;
      want += in;
    }
    CHECK(rps.count_union(rects) == want);
  }
}

TEST_CASE("distinct colors in quarterplanes, all four orientations") {
  std::vector<ColoredPoint> pts{{1, 1, 0}, {2, 2, 0}, {3, 3, 1}};
  ColoredPointSet cs(pts);
  // direct count: only color 0 has a point dominated by (2, 2)
  CHECK(cs.color_count(Quadrant{{2, true}, {2, true}}) == 1);
  CHECK(cs.color_count(Quadrant{{3, true}, {3, true}}) == 2);
  CHECK(cs.color_count(Quadrant{{0, true}, {0, true}}) == 0);
  CHECK(cs.color_count(Quadrant{{3, false}, {3, false}}) == 1);
  CHECK(cs.color_count(Quadrant{{2, false}, {2, true}}) == 1);

  Rng rng(0xC01);
  for (int trial = 0; trial < 250; ++trial) {
    int n = rng.ri(0, 120);
    int colors = rng.ri(1, 10);
    std::vector<ColoredPoint> rpts(n);
    for (auto& p : rpts) {
      p.x = rng.ri(-15, 15);
      p.y = rng.ri(-15, 15);
      p.color = rng.ri(0, colors - 1);
    }
    ColoredPointSet rcs(rpts);
    for (int q = 0; q < 8; ++q) {
      Quadrant quad{{rng.ri(-18, 18), rng.ri(0, 1) == 1},
                    {rng.ri(-18, 18), rng.ri(0, 1) == 1}};
      std::set<int32_t> seen;
      for (const ColoredPoint& p : rpts) {
        bool okx = quad.x.upper ? p.x <= quad.x.value : p.x >= quad.x.value;
        bool oky = quad.y.upper ? p.y <= quad.y.value : p.y >= quad.y.value;
        if (okx && oky) seen.insert(p.color);
      }
      CHECK(rcs.color_count(quad) == (int64_t)seen.size());
    }
  }
}

TEST_CASE("special-occurrence distinct counting") {
  // pattern 0 at (5,6) and (8,9); pattern 1 at (9,12)
  CountDistinctSpecial s({{5, 6, 0}, {8, 9, 0}, {9, 12, 1}});
  CHECK(s.count(5, 12) == 2);
  CHECK(s.count(6, 8) == 0);
  CHECK(s.count(8, 9) == 1);
  CHECK(s.count(9, 8) == 0);  // empty window
  CHECK(CountDistinctSpecial(std::vector<ColoredPoint>{}).count(1, 10) == 0);

  // full occurrence sets of the worked example's dictionary
  // aa: 3,4,5,8,12  aaaa: 3  abba: 9  c: 14
  std::vector<ColoredPoint> occ;
  for (int32_t a : {3, 4, 5, 8, 12}) occ.push_back({a, a + 1, 0});
  occ.push_back({3, 6, 1});
  occ.push_back({9, 12, 2});
  occ.push_back({14, 14, 3});
  CountDistinctSpecial ex(occ);
  CHECK(ex.count(5, 12) == 2);
  CHECK(ex.count(2, 12) == 3);
  CHECK(ex.count(2, 6) == 2);
}

TEST_CASE("dynamic point multiset matches a naive mirror") {
  DynamicPointSet2D dyn;
  dyn.insert({1, 1});
  CHECK(dyn.count(Rect{}) == 1);
  dyn.insert({1, 1});
  CHECK(dyn.count(Rect{}) == 2);
  dyn.erase({1, 1});
  CHECK(dyn.count(Rect{}) == 1);
  CHECK_THROWS_AS(dyn.erase({9, 9}), std::invalid_argument);

  Rng rng(0xD11);
  std::multiset<std::pair<int64_t, int64_t>> mirror;
  DynamicPointSet2D d2;
  for (int step = 0; step < 600; ++step) {
    int op = rng.ri(0, 2);
    if (op == 0 || mirror.empty()) {
      Point2D p{rng.ri(-8, 8), rng.ri(-8, 8)};
      d2.insert(p);
      mirror.emplace(p.x, p.y);
    } else if (op == 1) {
      auto it = mirror.begin();
      std::advance(it, rng.ri(0, (int32_t)mirror.size() - 1));
      d2.erase({it->first, it->second});
      mirror.erase(it);
    } else {
      Rect r = random_rect(rng, -10, 10);
      int64_t want = 0;
      for (auto& [x, y] : mirror)
        want += x >= r.x1 && x <= r.x2 && y >= r.y1 && y <= r.y2;
      CHECK(d2.count(r) == want);
    }
  }
  CHECK(d2.size() == (int64_t)mirror.size());
}
