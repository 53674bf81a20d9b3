#include "idm/dynamic.hpp"

namespace idm {

DynamicIndex::DynamicIndex(const MirroredText& mt, const std::vector<Fragment>& initial,
                           int32_t k, ApproxOptions opt)
    : mt_(&mt), opt_(opt), k_(k) {
  if (k_ < 1) throw std::invalid_argument("DynamicIndex: k must be >= 1");
  base_ = std::make_unique<ApproxIndex>(mt, Dictionary(mt.fwd, initial), opt_);
  reset_keys();
}

void DynamicIndex::reset_keys() {
  base_keys_.clear();
  for (Fragment f : base_->dict().patterns())
    base_keys_.insert(mt_->fwd.fragment_key(f));
}

void DynamicIndex::insert_pattern(Fragment f) {
  if (f.empty() || !mt_->fwd.text().in_range(f))
    throw std::invalid_argument("insert_pattern: bad fragment");
  uint64_t key = mt_->fwd.fragment_key(f);
  if (auto it = del_.find(key); it != del_.end()) {
    del_.erase(it);
  } else if (base_keys_.count(key) || ins_.count(key)) {
    return;  // already a member
  } else {
    ins_.emplace(key, f);
  }
  if (++updates_ >= k_) rebuild();
}

void DynamicIndex::delete_pattern(Fragment f) {
  if (f.empty() || !mt_->fwd.text().in_range(f))
    throw std::invalid_argument("delete_pattern: bad fragment");
  uint64_t key = mt_->fwd.fragment_key(f);
  if (auto it = ins_.find(key); it != ins_.end()) {
    ins_.erase(it);
  } else if (base_keys_.count(key) && !del_.count(key)) {
    del_.emplace(key, f);
  } else {
    throw std::invalid_argument("delete_pattern: pattern is not a member");
  }
  if (++updates_ >= k_) rebuild();
}

int64_t DynamicIndex::count_distinct(int32_t i, int32_t j) const {
  if (j < i) return 0;
  ApproxAnswer ans = base_->query(i, j);
  int64_t v = ans.value;
  for (const auto& [key, p] : ins_)
    if (exists(mt_->fwd, p, i, j)) ++v;
  for (const auto& [key, p] : del_) {
    if (!ans.split) {
      v -= exists(mt_->fwd, p, i, j) ? 1 : 0;
      continue;
    }
    // How many times the static answer counted this pattern: once per basic
    // factor containing it, or once through the middle if in neither.
    int64_t c = (exists(mt_->fwd, p, i, ans.i_prime) ? 1 : 0) +
                (exists(mt_->fwd, p, ans.j_prime, j) ? 1 : 0);
    if (c == 0) c = exists(mt_->fwd, p, i, j) ? 1 : 0;
    v -= c;
  }
  return v;
}

std::vector<Fragment> DynamicIndex::current_dictionary() const {
  std::vector<Fragment> out;
  for (Fragment f : base_->dict().patterns())
    if (!del_.count(mt_->fwd.fragment_key(f))) out.push_back(f);
  for (const auto& [key, f] : ins_) out.push_back(f);
  return out;
}

void DynamicIndex::rebuild() {
  BasicFragmentTable table = base_->basic_table();
  if (!ins_.empty()) {
    std::vector<Fragment> frs;
    for (const auto& [key, f] : ins_) frs.push_back(f);
    DeltaEngine eng(*mt_, Dictionary(mt_->fwd, frs));
    table.apply_correction(eng, +1);
  }
  if (!del_.empty()) {
    std::vector<Fragment> frs;
    for (const auto& [key, f] : del_) frs.push_back(f);
    DeltaEngine eng(*mt_, Dictionary(mt_->fwd, frs));
    table.apply_correction(eng, -1);
  }
  Dictionary next(mt_->fwd, current_dictionary());
  base_ = std::make_unique<ApproxIndex>(*mt_, std::move(next), opt_, std::move(table));
  ins_.clear();
  del_.clear();
  updates_ = 0;
  ++rebuilds_;
  reset_keys();
}

}  // namespace idm
