#include "idm/text_index.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace idm {
namespace detail {

SuffixCore::SuffixCore(std::string_view s, bool keep_only_rank) {
  n_ = static_cast<int32_t>(s.size());
  const int32_t n = n_;
  sa_.resize(n);
  rank_.resize(n);
  if (n == 0) return;

  // Doubling with counting sort.
  {
    std::vector<int32_t> cnt(std::max<int32_t>(n, 256) + 1, 0);
    std::vector<int32_t> tmp(n);
    for (int32_t i = 0; i < n; ++i) cnt[static_cast<uint8_t>(s[i]) + 1]++;
    for (size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (int32_t i = 0; i < n; ++i) sa_[cnt[static_cast<uint8_t>(s[i])]++] = i;
    rank_[sa_[0]] = 0;
    for (int32_t x = 1; x < n; ++x)
      rank_[sa_[x]] = rank_[sa_[x - 1]] + (s[sa_[x]] != s[sa_[x - 1]] ? 1 : 0);

    std::vector<int32_t> next_rank(n);
    for (int32_t k = 1; k < n && rank_[sa_[n - 1]] != n - 1; k <<= 1) {
      // Order by the second key: positions without one come first.
      int32_t fill = 0;
      for (int32_t i = n - k; i < n; ++i) tmp[fill++] = i;
      for (int32_t x = 0; x < n; ++x)
        if (sa_[x] >= k) tmp[fill++] = sa_[x] - k;
      // Stable counting sort by the first key.
      std::fill(cnt.begin(), cnt.begin() + n + 1, 0);
      for (int32_t i = 0; i < n; ++i) cnt[rank_[i] + 1]++;
      for (int32_t i = 1; i <= n; ++i) cnt[i] += cnt[i - 1];
      for (int32_t i = 0; i < n; ++i) sa_[cnt[rank_[tmp[i]]]++] = tmp[i];

      next_rank[sa_[0]] = 0;
      for (int32_t x = 1; x < n; ++x) {
        int32_t a = sa_[x - 1], b = sa_[x];
        bool same = rank_[a] == rank_[b] &&
                    (a + k < n ? (b + k < n && rank_[a + k] == rank_[b + k])
                               : b + k >= n);
        next_rank[b] = next_rank[a] + (same ? 0 : 1);
      }
      rank_.swap(next_rank);
    }
  }
  if (keep_only_rank) {
    sa_.clear();
    sa_.shrink_to_fit();
    return;
  }

  // Kasai.
  lcp_.assign(n, 0);
  {
    int32_t h = 0;
    for (int32_t i = 0; i < n; ++i) {
      if (rank_[i] == 0) {
        h = 0;
        continue;
      }
      int32_t j = sa_[rank_[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
      lcp_[rank_[i]] = h;
      if (h > 0) --h;
    }
  }

  // Sparse table of range minima over lcp_.
  int32_t levels = 1;
  while ((1 << levels) <= n) ++levels;
  st_.assign(levels, {});
  st_[0] = lcp_;
  for (int32_t k = 1; k < levels; ++k) {
    int32_t span = 1 << k;
    if (span > n) break;
    st_[k].resize(n - span + 1);
    for (int32_t i = 0; i + span <= n; ++i)
      st_[k][i] = std::min(st_[k - 1][i], st_[k - 1][i + (span >> 1)]);
  }
}

int32_t SuffixCore::lce0(int32_t i, int32_t j) const {
  if (i == j) return n_ - i;
  int32_t a = rank_[i], b = rank_[j];
  if (a > b) std::swap(a, b);
  // min lcp_ over (a, b]
  int32_t l = a + 1, r = b;
  int32_t k = 31 - __builtin_clz(r - l + 1);
  return std::min(st_[k][l], st_[k][r - (1 << k) + 1]);
}

}  // namespace detail

namespace {

int32_t least_rotation(std::string_view s) {
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    char a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (static_cast<uint8_t>(a) > static_cast<uint8_t>(b))
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

// Longest Lyndon word starting at each position, as next-smaller-suffix
// distances over the given rank array.
std::vector<int32_t> lyndon_lengths(const std::vector<int32_t>& rank) {
  const int32_t n = static_cast<int32_t>(rank.size());
  std::vector<int32_t> lam(n);
  std::vector<int32_t> stack;
  stack.reserve(n);
  for (int32_t i = n - 1; i >= 0; --i) {
    while (!stack.empty() && rank[stack.back()] > rank[i]) stack.pop_back();
    lam[i] = (stack.empty() ? n : stack.back()) - i;
    stack.push_back(i);
  }
  return lam;
}

}  // namespace

TextIndex::TextIndex(Text text) : text_(std::move(text)) {
  if (text_.n() == 0) throw std::invalid_argument("TextIndex: empty text");
  const int32_t n = text_.n();
  fwd_ = detail::SuffixCore(text_.view());
  {
    std::string rev(text_.view().rbegin(), text_.view().rend());
    rev_ = detail::SuffixCore(rev);
  }
  {
    std::string flip(text_.view());
    for (char& c : flip) c = static_cast<char>(255 - static_cast<uint8_t>(c));
    detail::SuffixCore flip_core(flip, /*keep_only_rank=*/true);
    flip_rank_ = flip_core.rank();
  }
  {
    std::vector<uint32_t> vals(n);
    for (int32_t x = 0; x < n; ++x) vals[x] = static_cast<uint32_t>(fwd_.sa()[x] + 1);
    occ_.build(std::move(vals), static_cast<uint32_t>(n + 1));
  }
  build_suffix_tree();
  build_runs();
}

void TextIndex::check_pos(int32_t pos) const {
  if (pos < 1 || pos > n()) throw std::out_of_range("TextIndex: position out of range");
}

int32_t TextIndex::lce(int32_t i, int32_t j) const {
  check_pos(i);
  check_pos(j);
  return fwd_.lce0(i - 1, j - 1);
}

int32_t TextIndex::lcs(int32_t i, int32_t j) const {
  if (i < 1 || j < 1) return 0;
  check_pos(i);
  check_pos(j);
  return rev_.lce0(n() - i, n() - j);
}

void TextIndex::build_suffix_tree() {
  const int32_t n = text_.n();
  const auto& sa = fwd_.sa();
  // lcp between adjacent suffixes, recomputed locally from lce.
  auto lcp_at = [&](int32_t x) { return fwd_.lce0(sa[x - 1], sa[x]); };

  st_parent_.clear();
  st_depth_.clear();
  st_lo_.clear();
  st_hi_.clear();
  st_leaf_.assign(n, -1);
  st_parent_.reserve(2 * n + 2);

  auto new_node = [&](int32_t depth, int32_t lo) {
    st_parent_.push_back(0);
    st_depth_.push_back(depth);
    st_lo_.push_back(lo);
    st_hi_.push_back(-1);
    return static_cast<int32_t>(st_parent_.size()) - 1;
  };

  new_node(0, 0);  // root
  std::vector<int32_t> stack{0};
  for (int32_t x = 0; x < n; ++x) {
    if (x > 0) {
      int32_t h = lcp_at(x);
      int32_t last = -1;
      while (st_depth_[stack.back()] > h) {
        last = stack.back();
        stack.pop_back();
        st_hi_[last] = x - 1;
        st_parent_[last] = stack.back();
      }
      if (st_depth_[stack.back()] < h) {
        int32_t u = new_node(h, st_lo_[last]);
        st_parent_[u] = stack.back();
        if (last != -1) st_parent_[last] = u;
        stack.push_back(u);
      }
    }
    int32_t leaf = new_node(n - sa[x], x);
    st_parent_[leaf] = stack.back();
    st_leaf_[x] = leaf;
    stack.push_back(leaf);
  }
  while (stack.size() > 1) {
    int32_t v = stack.back();
    stack.pop_back();
    st_hi_[v] = n - 1;
    st_parent_[v] = stack.back();
  }
  st_hi_[0] = n - 1;

  // Binary lifting.
  const int32_t m = static_cast<int32_t>(st_parent_.size());
  int32_t levels = 1;
  while ((1 << levels) < m) ++levels;
  st_up_.assign(levels, std::vector<int32_t>(m));
  st_up_[0] = st_parent_;
  for (int32_t k = 1; k < levels; ++k)
    for (int32_t v = 0; v < m; ++v) st_up_[k][v] = st_up_[k - 1][st_up_[k - 1][v]];
}

std::pair<int32_t, int32_t> TextIndex::locus(int32_t start, int32_t len) const {
  check_pos(start);
  if (len < 1 || len > n() - start + 1)
    throw std::out_of_range("TextIndex::locus: bad length");
  int32_t v = st_leaf_[fwd_.rank()[start - 1]];
  for (int32_t k = static_cast<int32_t>(st_up_.size()) - 1; k >= 0; --k) {
    int32_t u = st_up_[k][v];
    if (st_depth_[u] >= len) v = u;
  }
  return {st_lo_[v], st_hi_[v]};
}

uint64_t TextIndex::fragment_key(Fragment f) const {
  if (f.empty() || !text_.in_range(f))
    throw std::invalid_argument("fragment_key: empty or out-of-range fragment");
  auto [lo, hi] = locus(f.start, f.len());
  (void)hi;
  return (static_cast<uint64_t>(lo + 1) << 32) | static_cast<uint32_t>(f.len());
}

int64_t TextIndex::occ_count(int32_t lo, int32_t hi, int32_t min_pos,
                             int32_t max_pos) const {
  if (lo > hi || min_pos > max_pos) return 0;
  return occ_.count_range(lo, hi + 1, min_pos, max_pos);
}

std::optional<int32_t> TextIndex::occ_successor(int32_t lo, int32_t hi,
                                                int32_t min_pos) const {
  if (lo > hi) return std::nullopt;
  auto r = occ_.successor(lo, hi + 1, static_cast<uint32_t>(std::max(min_pos, 1)));
  if (!r) return std::nullopt;
  return static_cast<int32_t>(*r);
}

int32_t TextIndex::intern_root(Fragment root) {
  std::string key(text_.sub(root));
  auto it = root_ids_.find(key);
  if (it != root_ids_.end()) return it->second;
  int32_t id = static_cast<int32_t>(roots_.size());
  roots_.push_back(root);
  root_ids_.emplace(std::move(key), id);
  return id;
}

void TextIndex::build_runs() {
  const int32_t n = text_.n();
  std::unordered_set<uint64_t> seen;
  std::vector<std::pair<int64_t, int32_t>> found;  // ((s<<32)|e, period)

  auto extend = [&](const std::vector<int32_t>& lam) {
    for (int32_t i = 0; i < n; ++i) {
      int32_t p = lam[i];
      if (2 * p > n) continue;
      int32_t er = (i + p < n) ? fwd_.lce0(i, i + p) : 0;
      int32_t e = i + p - 1 + er;
      int32_t el = 0;
      if (i > 0 && i + p - 1 < n) el = rev_.lce0(n - i, n - (i + p));
      int32_t s = i - el;
      if (e - s + 1 >= 2 * p) {
        uint64_t key = (static_cast<uint64_t>(s) << 32) | static_cast<uint32_t>(e);
        if (seen.insert(key).second)
          found.emplace_back((static_cast<int64_t>(s) << 32) | e, p);
      }
    }
  };
  extend(lyndon_lengths(fwd_.rank()));
  extend(lyndon_lengths(flip_rank_));

  std::sort(found.begin(), found.end());
  runs_.clear();
  runs_.reserve(found.size());
  for (auto& [key, p] : found) {
    Run r;
    r.start = static_cast<int32_t>(key >> 32) + 1;
    r.end = static_cast<int32_t>(key & 0xffffffff) + 1;
    r.period = p;
    int32_t rot = minimal_rotation(Fragment(r.start, r.start + p - 1));
    r.lyndon_root = Fragment(r.start + rot, r.start + rot + p - 1);
    r.root_offset = (p - rot) % p;
    r.root_id = intern_root(r.lyndon_root);
    runs_.push_back(r);
  }

  // Interval stabbing lists per position, sorted by period.
  stab_offsets_.assign(n + 2, 0);
  for (const Run& r : runs_)
    for (int32_t pos = r.start; pos <= r.end; ++pos) stab_offsets_[pos + 1]++;
  for (int32_t i = 1; i <= n + 1; ++i) stab_offsets_[i] += stab_offsets_[i - 1];
  stab_runs_.assign(stab_offsets_[n + 1], 0);
  {
    std::vector<int32_t> fill(stab_offsets_.begin(), stab_offsets_.end());
    for (int32_t idx = 0; idx < static_cast<int32_t>(runs_.size()); ++idx)
      for (int32_t pos = runs_[idx].start; pos <= runs_[idx].end; ++pos)
        stab_runs_[fill[pos]++] = idx;
  }
  for (int32_t pos = 1; pos <= n; ++pos) {
    std::sort(stab_runs_.begin() + stab_offsets_[pos],
              stab_runs_.begin() + stab_offsets_[pos + 1],
              [&](int32_t a, int32_t b) { return runs_[a].period < runs_[b].period; });
  }
}

std::optional<Run> TextIndex::run_of(Fragment f) const {
  if (f.empty() || !text_.in_range(f))
    throw std::invalid_argument("run_of: empty or out-of-range fragment");
  int32_t half = f.len() / 2;
  for (int32_t k = stab_offsets_[f.start]; k < stab_offsets_[f.start + 1]; ++k) {
    const Run& r = runs_[stab_runs_[k]];
    if (r.period > half) break;  // sorted by period
    if (r.end >= f.end) return r;
  }
  return std::nullopt;
}

int32_t TextIndex::minimal_rotation(Fragment f) const {
  if (f.empty() || !text_.in_range(f))
    throw std::invalid_argument("minimal_rotation: empty or out-of-range fragment");
  return least_rotation(text_.sub(f));
}

PeriodicRep TextIndex::periodic_rep(Fragment f) const {
  auto run = run_of(f);
  if (!run) throw std::invalid_argument("periodic_rep: fragment is aperiodic");
  const int32_t p = run->period;
  int32_t o = ((f.start - run->lyndon_root.start) % p + p) % p;
  PeriodicRep rep;
  rep.root_id = run->root_id;
  rep.root_len = p;
  rep.head = (p - o) % p;
  int32_t rem = f.len() - rep.head;
  rep.reps = rem / p;
  rep.tail = rem % p;
  assert(rep.reps >= 1);
  return rep;
}

}  // namespace idm
