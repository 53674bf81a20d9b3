#include "idm/dmod_tree.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

namespace idm {

Dictionary::Dictionary(const TextIndex& ti, const std::vector<Fragment>& fragments) {
  std::unordered_set<uint64_t> seen;
  patterns_.reserve(fragments.size());
  for (Fragment f : fragments) {
    if (f.empty()) throw std::invalid_argument("Dictionary: empty pattern");
    if (!ti.text().in_range(f))
      throw std::invalid_argument("Dictionary: pattern out of range");
    if (seen.insert(ti.fragment_key(f)).second) patterns_.push_back(f);
  }
}

DModTree::DModTree(const TextIndex& ti, const Dictionary& dict)
    : ti_(&ti), dict_(dict) {
  const int32_t n = ti.n();

  struct Item {
    int32_t lo, hi, len;
    int32_t pattern_id = -1;
    int32_t suffix_label = 0;
  };
  std::vector<Item> items;
  items.reserve(n + dict.size());
  std::unordered_map<uint64_t, int32_t> index;  // (lo, len) -> item slot
  auto add = [&](int32_t lo, int32_t hi, int32_t len, int32_t pid, int32_t suf) {
    uint64_t key = (static_cast<uint64_t>(lo) << 32) | static_cast<uint32_t>(len);
    auto [it, fresh] = index.emplace(key, static_cast<int32_t>(items.size()));
    if (fresh) items.push_back(Item{lo, hi, len, pid, suf});
    Item& slot = items[it->second];
    if (pid >= 0) slot.pattern_id = pid;
    if (suf > 0) slot.suffix_label = suf;
  };
  for (int32_t i = 1; i <= n; ++i) {
    // The node of a suffix spans every suffix it prefixes, not only its own
    // suffix-array slot.
    auto [lo, hi] = ti.locus(i, n - i + 1);
    add(lo, hi, n - i + 1, -1, i);
  }
  for (int32_t pid = 0; pid < dict.size(); ++pid) {
    Fragment f = dict.pattern(pid);
    auto [lo, hi] = ti.locus(f.start, f.len());
    add(lo, hi, f.len(), pid, 0);
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi > b.hi;
    return a.len < b.len;
  });

  const int32_t m = static_cast<int32_t>(items.size()) + 1;
  parent_.assign(m, 0);
  weight_.assign(m, 0);
  lo_.assign(m, 0);
  hi_.assign(m, 0);
  pattern_id_.assign(m, -1);
  suffix_label_.assign(m, 0);
  cnt_.assign(m, 0);
  nearest_pat_.assign(m, -1);
  leaf_of_.assign(n + 1, 0);
  pattern_node_.assign(dict.size(), 0);
  hi_[0] = n - 1;

  std::vector<int32_t> stack{0};
  for (int32_t idx = 0; idx < static_cast<int32_t>(items.size()); ++idx) {
    const Item& it = items[idx];
    int32_t v = idx + 1;
    while (!(lo_[stack.back()] <= it.lo && it.hi <= hi_[stack.back()]))
      stack.pop_back();
    int32_t par = stack.back();
    assert(weight_[par] < it.len);
    parent_[v] = par;
    weight_[v] = it.len;
    lo_[v] = it.lo;
    hi_[v] = it.hi;
    pattern_id_[v] = it.pattern_id;
    suffix_label_[v] = it.suffix_label;
    cnt_[v] = cnt_[par] + (it.pattern_id >= 0 ? 1 : 0);
    nearest_pat_[v] = it.pattern_id >= 0 ? v : nearest_pat_[par];
    if (it.suffix_label > 0) leaf_of_[it.suffix_label] = v;
    if (it.pattern_id >= 0) pattern_node_[it.pattern_id] = v;
    stack.push_back(v);
  }

  child_off_.assign(m + 1, 0);
  for (int32_t v = 1; v < m; ++v) child_off_[parent_[v] + 1]++;
  for (int32_t v = 1; v <= m; ++v) child_off_[v] += child_off_[v - 1];
  child_.assign(m - 1, 0);
  {
    std::vector<int32_t> fill(child_off_.begin(), child_off_.end());
    for (int32_t v = 1; v < m; ++v) child_[fill[parent_[v]]++] = v;
  }

  int32_t levels = 1;
  while ((1 << levels) < m) ++levels;
  up_.assign(levels, std::vector<int32_t>(m));
  up_[0] = parent_;
  for (int32_t k = 1; k < levels; ++k)
    for (int32_t v = 0; v < m; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
}

std::span<const int32_t> DModTree::children(int32_t v) const {
  return std::span<const int32_t>(child_.data() + child_off_[v],
                                  child_off_[v + 1] - child_off_[v]);
}

int32_t DModTree::weighted_ancestor(int32_t v, int32_t depth) const {
  if (depth < 1 || depth > weight_[v])
    throw std::out_of_range("weighted_ancestor: depth out of range");
  for (int32_t k = static_cast<int32_t>(up_.size()) - 1; k >= 0; --k) {
    int32_t u = up_[k][v];
    if (weight_[u] >= depth) v = u;
  }
  return v;
}

int64_t DModTree::pattern_prefix_count(int32_t pos, int32_t len) const {
  if (pos < 1 || pos > ti_->n())
    throw std::out_of_range("pattern_prefix_count: position out of range");
  if (len < 0 || len > ti_->n() - pos + 1)
    throw std::out_of_range("pattern_prefix_count: length out of range");
  if (len == 0) return 0;
  int32_t u = weighted_ancestor(leaf_of_[pos], len);
  return weight_[u] == len ? cnt_[u] : cnt_[parent_[u]];
}

std::optional<std::pair<int32_t, int32_t>> DModTree::pref_d(int32_t l,
                                                            int32_t r) const {
  if (l < 1 || l > ti_->n() || r > ti_->n())
    throw std::out_of_range("pref_d: fragment out of range");
  if (r < l) return std::nullopt;
  int32_t u = weighted_ancestor(leaf_of_[l], r - l + 1);
  int32_t v = weight_[u] == r - l + 1 ? u : parent_[u];
  int32_t w = nearest_pat_[v];
  if (w < 0) return std::nullopt;
  return std::make_pair(pattern_id_[w], weight_[w]);
}

std::vector<int32_t> DModTree::occurrences_of(int32_t pid) const {
  int32_t v = pattern_node_[pid];
  std::vector<int32_t> out;
  out.reserve(hi_[v] - lo_[v] + 1);
  const auto& sa = ti_->sa();
  for (int32_t x = lo_[v]; x <= hi_[v]; ++x) out.push_back(sa[x] + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int32_t, Fragment>> DModTree::enumerate_occurrences() const {
  std::vector<std::pair<int32_t, Fragment>> out;
  for (int32_t pid = 0; pid < dict_.size(); ++pid) {
    int32_t len = dict_.length(pid);
    for (int32_t a : occurrences_of(pid))
      out.emplace_back(pid, Fragment(a, a + len - 1));
  }
  return out;
}

int64_t DModTree::occurrence_total() const {
  int64_t total = 0;
  for (int32_t pid = 0; pid < dict_.size(); ++pid) {
    int32_t v = pattern_node_[pid];
    total += hi_[v] - lo_[v] + 1;
  }
  return total;
}

}  // namespace idm
