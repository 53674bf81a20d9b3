#include "idm/squares.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace idm {

SquaresIndex::SquaresIndex(const TextIndex& ti) : ti_(&ti) {
  std::unordered_map<uint64_t, int32_t> ids;
  std::vector<ColoredPoint> points;
  const auto& runs = ti.runs();
  for (int32_t run_idx = 0; run_idx < static_cast<int32_t>(runs.size()); ++run_idx) {
    const Run& r = runs[run_idx];
    const int32_t p = r.period;
    const int32_t ls = r.lyndon_root.start;
    for (int32_t k = 1; 2 * k * p <= r.len(); ++k) {
      const int32_t sq_len = 2 * k * p;
      const int32_t max_start = r.end - sq_len + 1;
      const int32_t offsets = std::min(p, max_start - r.start + 1);
      for (int32_t t = 0; t < offsets; ++t) {
        const int32_t s0 = r.start + t;
        const int32_t o = ((s0 - ls) % p + p) % p;
        uint64_t key = (static_cast<uint64_t>(r.root_id) << 42) |
                       (static_cast<uint64_t>(k) << 21) | static_cast<uint32_t>(o);
        auto [it, fresh] = ids.emplace(key, static_cast<int32_t>(squares_.size()));
        if (fresh) {
          squares_.push_back({r.root_id, k, o});
          witness_.push_back(Fragment(s0, s0 + sq_len - 1));
          boundary_.emplace_back();
        }
        const int32_t sq = it->second;
        const int32_t right = s0 + (max_start - s0) / p * p;
        boundary_[sq].push_back(
            {run_idx, Fragment(s0, s0 + sq_len - 1), Fragment(right, right + sq_len - 1)});
        points.push_back({s0, s0 + sq_len - 1, sq});
        boundary_total_ += 1;
        if (right != s0) {
          points.push_back({right, right + sq_len - 1, sq});
          boundary_total_ += 1;
        }
      }
    }
  }
  counter_ = CountDistinctSpecial(std::move(points));
}

int32_t SquaresIndex::period_of(Fragment f) const {
  auto run = ti_->run_of(f);
  if (!run) throw std::invalid_argument("SquaresIndex: fragment is aperiodic");
  return run->period;
}

int64_t SquaresIndex::run_squares_len(int64_t len, int64_t p) {
  int64_t total = 0;
  for (int64_t k = 1; 2 * k * p <= len; ++k)
    total += std::min<int64_t>(p, len - 2 * k * p + 1);
  return total;
}

int64_t SquaresIndex::bsq_prime_len(int64_t len, int64_t p, int64_t x) {
  if (x <= 0) return 0;
  int64_t t = len / (2 * p);
  int64_t rem = len % (2 * p);
  return x * t - std::max<int64_t>(0, x - rem - 1);
}

int64_t SquaresIndex::bsq_len(int64_t len, int64_t p, int64_t f1, int64_t f2) {
  // Map "ends in the last f2 positions" to canonical starting positions in
  // [1, p]: ending position q maps to start (q mod p) + 1, so the ends cover
  // a cyclic interval of f2 residues closing at (len mod p) + 1.
  struct Iv {
    int64_t lo, hi;
  };
  Iv ivs[3];
  int count = 0;
  if (f1 >= 1) ivs[count++] = {1, f1};
  if (f2 >= 1) {
    int64_t nu = len % p;
    if (f2 <= nu + 1) {
      ivs[count++] = {nu - f2 + 2, nu + 1};
    } else {
      ivs[count++] = {1, nu + 1};
      ivs[count++] = {p - (f2 - nu - 1) + 1, p};
    }
  }
  std::sort(ivs, ivs + count, [](const Iv& a, const Iv& b) { return a.lo < b.lo; });
  int64_t total = 0;
  int64_t reach = 0;  // positions [1, reach] already counted
  for (int c = 0; c < count; ++c) {
    int64_t lo = std::max(ivs[c].lo, reach + 1), hi = ivs[c].hi;
    if (lo > hi) continue;
    total += bsq_prime_len(len, p, hi) - bsq_prime_len(len, p, lo - 1);
    reach = std::max(reach, hi);
  }
  return total;
}

int64_t SquaresIndex::run_squares(Fragment f) const {
  return run_squares_len(f.len(), period_of(f));
}

int64_t SquaresIndex::bsq_prime(Fragment f, int32_t prefix_len) const {
  int32_t p = period_of(f);
  if (prefix_len < 0 || prefix_len > p)
    throw std::invalid_argument("bsq_prime: prefix longer than the period");
  return bsq_prime_len(f.len(), p, prefix_len);
}

int64_t SquaresIndex::bsq(Fragment f, Fragment f1, Fragment f2) const {
  int32_t p = period_of(f);
  if (!f1.empty() && (f1.start != f.start || f1.end > f.end))
    throw std::invalid_argument("bsq: f1 is not a prefix of f");
  if (!f2.empty() && (f2.end != f.end || f2.start < f.start))
    throw std::invalid_argument("bsq: f2 is not a suffix of f");
  if (f1.len() > p || f2.len() > p)
    throw std::invalid_argument("bsq: prefix or suffix longer than the period");
  return bsq_len(f.len(), p, f1.len(), f2.len());
}

int64_t SquaresIndex::count_distinct(int32_t i, int32_t j) const {
  const int32_t n = ti_->n();
  if (i < 1 || j > n) throw std::out_of_range("SquaresIndex: window out of range");
  if (j < i) return 0;
  int64_t base = counter_.count(i, j);
  if (j == i) return base;
  auto run = ti_->run_of(Fragment(i, j));
  if (!run) return base;
  const int32_t p = run->period;
  const int64_t f1 = std::max(0, run->start + p - i);
  const int64_t f2 = std::max(0, j - run->end + p);
  const int64_t len = j - i + 1;
  return base + run_squares_len(len, p) - bsq_len(len, p, f1, f2);
}

}  // namespace idm
