#include "idm/approx.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace idm {

HpPartition partition_by_periodicity(const TextIndex& ti, const Dictionary& dict) {
  HpPartition part;
  for (int32_t pid = 0; pid < dict.size(); ++pid) {
    Fragment f = dict.pattern(pid);
    auto run = ti.run_of(f);
    if (run && 4 * run->period <= f.len()) {
      part.hp_ids.push_back(pid);
      part.hp_reps.push_back(ti.periodic_rep(f));
    } else {
      part.non_hp_ids.push_back(pid);
    }
  }
  return part;
}

DeltaEngine::DeltaEngine(const MirroredText& mt, Dictionary dict)
    : mt_(&mt),
      dict_(std::move(dict)),
      rev_dict_([&] {
        std::vector<Fragment> rev;
        rev.reserve(dict_.patterns().size());
        for (Fragment f : dict_.patterns()) rev.push_back(mt.mirror(f));
        return Dictionary(mt.rev, rev);
      }()),
      fwd_(mt.fwd, dict_),
      rev_(mt.rev, rev_dict_) {}

int64_t DeltaEngine::delta_only_at_left(int32_t l, int32_t r) const {
  int32_t k = bounded_lcp(mt_->fwd, Fragment(l, r), Fragment(l + 1, r));
  return fwd_.pattern_prefix_count(l, r - l + 1) - fwd_.pattern_prefix_count(l, k);
}

int64_t DeltaEngine::delta_only_at_right(int32_t l, int32_t r) const {
  int32_t lm = mt_->mirror(r), rm = mt_->mirror(l);
  int32_t k = bounded_lcp(mt_->rev, Fragment(lm, rm), Fragment(lm + 1, rm));
  return rev_.pattern_prefix_count(lm, rm - lm + 1) - rev_.pattern_prefix_count(lm, k);
}

namespace {

// Deduplicated basic lengths floor((10/9)^p) capped at n.
std::vector<int32_t> basic_lengths(int32_t n) {
  std::vector<int32_t> out;
  long double v = 1.0L;
  while (true) {
    int32_t len = static_cast<int32_t>(std::floor(v));
    if (len > n) break;
    if (out.empty() || out.back() != len) out.push_back(len);
    v *= 10.0L / 9.0L;
  }
  return out;
}

// Exact CountDistinct over every window of one fixed length, emitted by a
// sliding pass: extend on the right, then contract on the left.
template <typename Emit>
void slide_length(const DeltaEngine& eng, int32_t len, Emit&& emit) {
  const int32_t n = eng.mirrored().n();
  if (len > n) return;
  int64_t cur = eng.pattern_prefix_count(1, 1);
  for (int32_t e = 2; e <= len; ++e) cur += eng.delta_only_at_right(1, e);
  emit(1, cur);
  for (int32_t s = 2; s + len - 1 <= n; ++s) {
    cur += eng.delta_only_at_right(s - 1, s + len - 1);
    cur -= eng.delta_only_at_left(s - 1, s + len - 1);
    emit(s, cur);
  }
}

}  // namespace

BasicFragmentTable::BasicFragmentTable(const DeltaEngine& eng) {
  n_ = eng.mirrored().n();
  lengths_ = basic_lengths(n_);
  prev_idx_.assign(n_ + 1, 0);
  for (int32_t len = 1, t = 0; len <= n_; ++len) {
    while (t + 1 < static_cast<int32_t>(lengths_.size()) && lengths_[t + 1] <= len) ++t;
    prev_idx_[len] = t;
  }
  row_off_.assign(lengths_.size() + 1, 0);
  for (size_t t = 0; t < lengths_.size(); ++t)
    row_off_[t + 1] = row_off_[t] + static_cast<size_t>(n_ - lengths_[t] + 1);
  counts_.assign(row_off_.back(), 0);
  for (size_t t = 0; t < lengths_.size(); ++t) {
    slide_length(eng, lengths_[t], [&](int32_t s, int64_t v) {
      counts_[row_off_[t] + s - 1] = static_cast<uint32_t>(v);
    });
  }
}

void BasicFragmentTable::apply_correction(const DeltaEngine& delta_eng, int32_t sign) {
  for (size_t t = 0; t < lengths_.size(); ++t) {
    slide_length(delta_eng, lengths_[t], [&](int32_t s, int64_t v) {
      counts_[row_off_[t] + s - 1] =
          static_cast<uint32_t>(static_cast<int64_t>(counts_[row_off_[t] + s - 1]) +
                                sign * v);
    });
  }
}

HpGrids::HpGrids(const HpPartition& part) {
  std::unordered_map<int64_t, std::vector<Point2D>> buckets;
  for (size_t idx = 0; idx < part.hp_ids.size(); ++idx) {
    const PeriodicRep& rep = part.hp_reps[idx];
    int64_t key = (static_cast<int64_t>(rep.root_id) << 32) | static_cast<uint32_t>(rep.reps);
    buckets[key].push_back({rep.head, rep.tail});
    auto& xs = x_[rep.root_id];
    if (static_cast<int32_t>(xs.size()) < rep.reps + 1) xs.resize(rep.reps + 1, 0);
    xs[rep.reps] += 1;
    ++total_;
  }
  for (auto& [key, pts] : buckets) grids_.emplace(key, PointSet2D(std::move(pts)));
  for (auto& [root, xs] : x_)
    for (size_t r = 1; r < xs.size(); ++r) xs[r] += xs[r - 1];
}

const PointSet2D* HpGrids::grid(int32_t root, int32_t rank) const {
  if (rank < 1) return nullptr;
  auto it = grids_.find((static_cast<int64_t>(root) << 32) | static_cast<uint32_t>(rank));
  return it == grids_.end() ? nullptr : &it->second;
}

int64_t HpGrids::x_prefix(int32_t root, int32_t rank) const {
  if (rank < 1) return 0;
  auto it = x_.find(root);
  if (it == x_.end()) return 0;
  const auto& xs = it->second;
  size_t idx = std::min<size_t>(rank, xs.size() - 1);
  return xs[idx];
}

int64_t HpGrids::periodic_count(const PeriodicRep& u) const {
  int64_t total = x_prefix(u.root_id, u.reps - 2);
  if (const PointSet2D* g = grid(u.root_id, u.reps))
    total += g->count(Rect{kNegInf, u.head, kNegInf, u.tail});
  if (const PointSet2D* g = grid(u.root_id, u.reps - 1)) {
    Rect by_head{kNegInf, u.head, kNegInf, kPosInf};
    Rect by_tail{kNegInf, kPosInf, kNegInf, u.tail};
    Rect rects[2] = {by_head, by_tail};
    total += g->count_union(rects);
  }
  return total;
}

int64_t HpGrids::periodic_union_count(const PeriodicRep& u1,
                                      const PeriodicRep& u2) const {
  if (u1.root_id != u2.root_id)
    throw std::invalid_argument("periodic_union_count: mismatched roots");
  const PeriodicRep& a = u1.reps >= u2.reps ? u1 : u2;
  const PeriodicRep& b = u1.reps >= u2.reps ? u2 : u1;
  if (b.reps <= a.reps - 2) return periodic_count(a);
  int64_t total = x_prefix(a.root_id, a.reps - 2);
  if (a.reps == b.reps) {
    if (const PointSet2D* g = grid(a.root_id, a.reps)) {
      Rect rects[2] = {Rect{kNegInf, a.head, kNegInf, a.tail},
                       Rect{kNegInf, b.head, kNegInf, b.tail}};
      total += g->count_union(rects);
    }
    if (const PointSet2D* g = grid(a.root_id, a.reps - 1)) {
      Rect rects[2] = {
          Rect{kNegInf, std::max(a.head, b.head), kNegInf, kPosInf},
          Rect{kNegInf, kPosInf, kNegInf, std::max(a.tail, b.tail)}};
      total += g->count_union(rects);
    }
  } else {  // b.reps == a.reps - 1
    if (const PointSet2D* g = grid(a.root_id, a.reps))
      total += g->count(Rect{kNegInf, a.head, kNegInf, a.tail});
    if (const PointSet2D* g = grid(a.root_id, a.reps - 1)) {
      Rect rects[3] = {Rect{kNegInf, a.head, kNegInf, kPosInf},
                       Rect{kNegInf, kPosInf, kNegInf, a.tail},
                       Rect{kNegInf, b.head, kNegInf, b.tail}};
      total += g->count_union(rects);
    }
  }
  return total;
}

ApproxIndex::ApproxIndex(const MirroredText& mt, Dictionary dict, ApproxOptions opt)
    : mt_(&mt),
      eng_(mt, std::move(dict)),
      part_(partition_by_periodicity(mt.fwd, eng_.dict())),
      grids_(part_),
      count_non_hp_(mt.fwd, eng_.dict(), part_.non_hp_ids, opt.max_occ),
      table_(eng_) {}

ApproxIndex::ApproxIndex(const MirroredText& mt, Dictionary dict, ApproxOptions opt,
                         BasicFragmentTable precomputed_table)
    : mt_(&mt),
      eng_(mt, std::move(dict)),
      part_(partition_by_periodicity(mt.fwd, eng_.dict())),
      grids_(part_),
      count_non_hp_(mt.fwd, eng_.dict(), part_.non_hp_ids, opt.max_occ),
      table_(std::move(precomputed_table)) {}

int64_t ApproxIndex::periodic_count(Fragment u) const {
  return grids_.periodic_count(mt_->fwd.periodic_rep(u));
}

int64_t ApproxIndex::periodic_union_count(Fragment u1, Fragment u2) const {
  return grids_.periodic_union_count(mt_->fwd.periodic_rep(u1),
                                     mt_->fwd.periodic_rep(u2));
}

int64_t ApproxIndex::three_fragments_count(Fragment f1, Fragment f2,
                                           Fragment f3) const {
  if (f2.start != f1.end + 1 || f3.start != f2.end + 1)
    throw std::invalid_argument("three_fragments_count: fragments not consecutive");
  if (f1.len() != f3.len())
    throw std::invalid_argument("three_fragments_count: |F1| != |F3|");
  if (f2.len() < 8 * f1.len())
    throw std::invalid_argument("three_fragments_count: |F2| < 8 |F1|");
  if (f1.empty()) return 0;

  Fragment f123(f1.start, f3.end), f12(f1.start, f2.end), f23(f2.start, f3.end);
  int64_t total = count_non_hp_.count(f123) - count_non_hp_.count(f12) -
                  count_non_hp_.count(f23) + count_non_hp_.count(f2);

  if (!grids_.empty() && !f2.empty()) {
    if (auto run = mt_->fwd.run_of(f2)) {
      Fragment r(run->start, run->end);
      PeriodicRep a = mt_->fwd.periodic_rep(f123.intersect(r));
      PeriodicRep b = mt_->fwd.periodic_rep(f12.intersect(r));
      PeriodicRep c = mt_->fwd.periodic_rep(f23.intersect(r));
      total += grids_.periodic_count(a) - grids_.periodic_union_count(b, c);
    }
  }
  return total;
}

int64_t ApproxIndex::exists_scan(int32_t i, int32_t j) const {
  int64_t total = 0;
  for (Fragment p : dict().patterns())
    if (exists(mt_->fwd, p, i, j)) ++total;
  return total;
}

ApproxAnswer ApproxIndex::query(int32_t i, int32_t j) const {
  const int32_t n = mt_->n();
  if (i < 1 || j > n) throw std::out_of_range("ApproxIndex::query: window out of range");
  if (j < i) return {0, false, 0, 0};
  const int32_t len = j - i + 1;
  int32_t t = table_.index_of_largest_leq(len);
  if (table_.length_at(t) == len) return {table_.count_at(i, t), false, 0, 0};

  const int32_t l = table_.length_at(t);
  const int32_t f1len = len - l, f2len = 2 * l - len;
  if (f2len < 1 || f2len < 8 * f1len) return {exists_scan(i, j), false, 0, 0};

  const int32_t ip = i + l - 1, jp = j - l + 1;
  int64_t v = table_.count_at(i, t) + table_.count_at(jp, t) +
              three_fragments_count(Fragment(i, jp - 1), Fragment(jp, ip),
                                    Fragment(ip + 1, j));
  return {v, true, ip, jp};
}

}  // namespace idm
