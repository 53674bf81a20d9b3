#pragma once

#include <span>
#include <vector>

#include "idm/geometry.hpp"
#include "idm/text_index.hpp"

namespace idm {

/// Identity of a distinct square factor: the square is (rot^o(L^rank))^2,
/// so its root has length rank * |L| and smallest period |L|.
struct SquareId {
  int32_t root_id = -1;
  int32_t rank = 0;
  int32_t rotation = 0;
  bool operator==(const SquareId&) const = default;
};

/// Leftmost and rightmost occurrence of one square inside one inducing run.
struct BoundaryEntry {
  int32_t run_idx = -1;
  Fragment leftmost;
  Fragment rightmost;
};

/// CountDistinct for the dictionary of all distinct square factors.
/// Boundary occurrences feed a distinct-color counter; windows that are
/// themselves periodic add a closed-form correction for the squares of
/// their own run.
class SquaresIndex {
 public:
  explicit SquaresIndex(const TextIndex& ti);

  int64_t count_distinct(int32_t i, int32_t j) const;

  int32_t distinct_squares() const { return static_cast<int32_t>(squares_.size()); }
  const std::vector<SquareId>& squares() const { return squares_; }
  Fragment witness(int32_t square_idx) const { return witness_[square_idx]; }
  std::span<const BoundaryEntry> boundary_of(int32_t square_idx) const {
    return boundary_[square_idx];
  }
  int64_t boundary_total() const { return boundary_total_; }

  /// Distinct squares of f interpreted as a standalone run.
  int64_t run_squares(Fragment f) const;
  /// Of the squares of f, those starting within its first prefix_len
  /// positions (prefix_len <= per(f)).
  int64_t bsq_prime(Fragment f, int32_t prefix_len) const;
  /// Distinct squares of f with an occurrence starting in the prefix f1 or
  /// ending in the suffix f2; |f1|, |f2| <= per(f).
  int64_t bsq(Fragment f, Fragment f1, Fragment f2) const;

  int64_t bytes() const { return counter_.bytes(); }

 private:
  int32_t period_of(Fragment f) const;
  static int64_t run_squares_len(int64_t len, int64_t p);
  static int64_t bsq_prime_len(int64_t len, int64_t p, int64_t x);
  static int64_t bsq_len(int64_t len, int64_t p, int64_t f1, int64_t f2);

  const TextIndex* ti_;
  std::vector<SquareId> squares_;
  std::vector<Fragment> witness_;
  std::vector<std::vector<BoundaryEntry>> boundary_;
  int64_t boundary_total_ = 0;
  CountDistinctSpecial counter_;
};

}  // namespace idm
