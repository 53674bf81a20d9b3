#include "idm/exact.hpp"

#include <algorithm>
#include <cassert>

namespace idm {

CanonicalIndex::CanonicalIndex(std::shared_ptr<const DeltaEngine> eng, int32_t m)
    : eng_(std::move(eng)), m_(m) {
  const TextIndex& ti = eng_->mirrored().fwd;
  const int32_t n = ti.n();
  if (m_ < 1 || m_ > n) throw std::invalid_argument("CanonicalIndex: bad m");
  rows_ = (n - 1) / m_ + 1;
  cmax_ = n / m_;

  const Dictionary& dict = eng_->dict();
  std::vector<std::pair<int32_t, int32_t>> loci(dict.size());
  std::vector<int32_t> lens(dict.size());
  for (int32_t pid = 0; pid < dict.size(); ++pid) {
    Fragment f = dict.pattern(pid);
    loci[pid] = ti.locus(f.start, f.len());
    lens[pid] = f.len();
  }

  row_off_.assign(rows_ + 1, 0);
  for (int32_t c1 = 0; c1 < rows_; ++c1)
    row_off_[c1 + 1] = row_off_[c1] + static_cast<size_t>(std::max(0, cmax_ - c1));
  table_.assign(row_off_.back(), 0);

  std::vector<uint32_t> hist(static_cast<size_t>(cmax_) + 2, 0);
  for (int32_t c1 = 0; c1 < rows_; ++c1) {
    if (cmax_ - c1 <= 0) break;
    std::fill(hist.begin(), hist.end(), 0);
    const int32_t i0 = c1 * m_ + 1;
    for (int32_t pid = 0; pid < dict.size(); ++pid) {
      auto succ = ti.occ_successor(loci[pid].first, loci[pid].second, i0);
      if (!succ) continue;
      int64_t first_end = static_cast<int64_t>(*succ) + lens[pid] - 1;
      int64_t c2 = (first_end + m_ - 1) / m_;
      if (c2 <= cmax_) hist[c2]++;
    }
    uint32_t acc = 0;
    for (int32_t c2 = c1 + 1; c2 <= cmax_; ++c2) {
      acc += hist[c2];
      table_[row_off_[c1] + (c2 - c1 - 1)] = acc;
    }
  }
}

int64_t CanonicalIndex::table_value(int32_t c1, int32_t c2) const {
  if (c1 < 0 || c1 >= rows_ || c2 <= c1 || c2 > cmax_)
    throw std::out_of_range("CanonicalIndex::table_value");
  return table_[row_off_[c1] + (c2 - c1 - 1)];
}

int64_t CanonicalIndex::count_distinct(int32_t i, int32_t j) const {
  const int32_t n = eng_->mirrored().n();
  if (i < 1 || j > n) throw std::out_of_range("CanonicalIndex: window out of range");
  if (j < i) return 0;

  const int32_t c1 = (i - 1 + m_ - 1) / m_;  // smallest start c1*m+1 >= i
  const int32_t c2 = j / m_;                 // largest end c2*m <= j
  int64_t v;
  int32_t left, right;
  if (c2 < c1) {
    // No canonical window inside; grow from the single-letter base.
    v = eng_->pattern_prefix_count(i, 1);
    left = i;
    right = i;
  } else {
    v = c2 == c1 ? 0 : table_value(c1, c2);
    left = c1 * m_ + 1;
    right = c2 * m_;
    // Left extensions first, with the right end parked at the grid.
    for (int32_t s = left - 1; s >= i; --s) v += eng_->delta_only_at_left(s, right);
    left = i;
  }
  for (int32_t e = right + 1; e <= j; ++e) v += eng_->delta_only_at_right(left, e);
  return v;
}

PathDecomposition decompose_path_sets(const DModTree& tree, int32_t k) {
  if (k < 1) throw std::invalid_argument("decompose_path_sets: k must be >= 1");
  PathDecomposition out;
  out.k = k;
  const Dictionary& dict = tree.dict();
  const int32_t m = tree.node_count();

  // A bottom node is a pattern node with no pattern strictly below it.
  std::vector<int32_t> sub(m, 0);
  for (int32_t v = m - 1; v >= 1; --v) {
    if (tree.is_pattern(v)) sub[v] += 1;
    sub[tree.parent(v)] += sub[v];
  }

  std::vector<char> marked(m, 0);
  std::vector<int32_t> path;        // current root-to-node chain (node ids)
  std::vector<char> path_marked;    // parallel: counted in N
  int32_t n_marked = 0;

  for (int32_t v = 1; v < m; ++v) {
    while (!path.empty() && path.back() != tree.parent(v)) {
      if (path_marked.back()) --n_marked;
      path.pop_back();
      path_marked.pop_back();
    }
    path.push_back(v);
    path_marked.push_back(0);

    bool bottom = tree.is_pattern(v) && sub[v] == 1;
    if (!bottom) continue;
    int32_t r = tree.pattern_anc_count(v) - n_marked;
    if (r < k) continue;

    // Extract v plus its r-1 nearest unmarked pattern ancestors.
    PathSet set;
    set.ids.push_back(tree.pattern_id(v));
    marked[v] = 1;
    path_marked.back() = 1;
    ++n_marked;
    int32_t u = tree.nearest_pattern_anc(tree.parent(v));
    for (int32_t taken = 1; taken < r; ++taken) {
      assert(u > 0 && !marked[u]);
      set.ids.push_back(tree.pattern_id(u));
      marked[u] = 1;
      ++n_marked;
      for (size_t idx = path.size(); idx-- > 0;)
        if (path[idx] == u) {
          path_marked[idx] = 1;
          break;
        }
      u = tree.nearest_pattern_anc(tree.parent(u));
    }
    std::reverse(set.ids.begin(), set.ids.end());  // ascending length
    for (int32_t pid : set.ids) set.lengths.push_back(dict.length(pid));
    set.longest = dict.pattern(set.ids.back());
    out.sets.push_back(std::move(set));
  }

  for (int32_t v = 1; v < m; ++v)
    if (tree.is_pattern(v) && !marked[v])
      out.remainder_ids.push_back(tree.pattern_id(v));
  return out;
}

PathSetIndex::PathSetIndex(std::shared_ptr<const DeltaEngine> eng, int32_t m,
                           int64_t max_occ)
    : eng_(std::move(eng)) {
  const Dictionary& dict = eng_->dict();
  const int32_t n = eng_->mirrored().n();
  if (m < 1 || m > n) throw std::invalid_argument("PathSetIndex: bad m");
  int32_t k = std::max<int32_t>(1, (dict.size() + m - 1) / m);
  decomp_ = decompose_path_sets(eng_->fwd_tree(), k);

  std::vector<ColoredPoint> occs;
  int64_t total = 0;
  const DModTree& tree = eng_->fwd_tree();
  for (size_t c = 0; c < decomp_.remainder_ids.size(); ++c) {
    int32_t pid = decomp_.remainder_ids[c];
    int32_t len = dict.length(pid);
    auto starts = tree.occurrences_of(pid);
    total += static_cast<int64_t>(starts.size());
    if (total > max_occ)
      throw build_limit_error("PathSetIndex: occurrence cap exceeded", max_occ, total);
    for (int32_t a : starts)
      occs.push_back({a, a + len - 1, static_cast<int32_t>(c)});
  }
  special_ = CountDistinctSpecial(std::move(occs));
}

int64_t PathSetIndex::count_distinct(int32_t i, int32_t j) const {
  const int32_t n = eng_->mirrored().n();
  if (i < 1 || j > n) throw std::out_of_range("PathSetIndex: window out of range");
  if (j < i) return 0;
  int64_t total = special_.count(i, j);
  const TextIndex& ti = eng_->mirrored().fwd;
  for (const PathSet& set : decomp_.sets) {
    int32_t b = bounded_lcp(ti, set.longest, Fragment(i, j));
    total += predecessor_count(set.lengths, b);
  }
  return total;
}

}  // namespace idm
