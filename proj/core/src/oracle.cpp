#include "idm/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace idm::oracle {

namespace {

void guard(size_t n) {
  if (n > static_cast<size_t>(kMaxN))
    throw std::invalid_argument("oracle: input longer than the size guard");
}

std::string_view slice(std::string_view t, int32_t i, int32_t j) {
  if (j < i) return {};
  return t.substr(static_cast<size_t>(i) - 1, static_cast<size_t>(j - i + 1));
}

}  // namespace

int32_t period(std::string_view s) {
  guard(s.size());
  const int32_t n = static_cast<int32_t>(s.size());
  for (int32_t p = 1; p < n; ++p) {
    bool ok = true;
    for (int32_t i = 0; i + p < n; ++i)
      if (s[i] != s[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return n;
}

bool is_periodic(std::string_view s) {
  return !s.empty() && 2 * period(s) <= static_cast<int32_t>(s.size());
}

std::vector<int32_t> occurrences(std::string_view text, std::string_view pat) {
  guard(text.size());
  std::vector<int32_t> out;
  if (pat.empty() || pat.size() > text.size()) return out;
  for (size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (text.compare(i, pat.size(), pat) == 0) out.push_back(static_cast<int32_t>(i) + 1);
  return out;
}

int32_t lce(std::string_view text, int32_t i, int32_t j) {
  guard(text.size());
  int32_t k = 0;
  const int32_t n = static_cast<int32_t>(text.size());
  while (i + k <= n && j + k <= n && text[i + k - 1] == text[j + k - 1]) ++k;
  return k;
}

int32_t minimal_rotation(std::string_view s) {
  guard(s.size());
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t best = 0;
  std::string cur(s), m(s);
  for (int32_t o = 1; o < n; ++o) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < m) {
      m = cur;
      best = o;
    }
  }
  return best;
}

int32_t bounded_lcp(std::string_view text, int32_t u1, int32_t u2, int32_t v1,
                    int32_t v2) {
  guard(text.size());
  int32_t best = 0;
  for (int32_t s = v1; s <= v2; ++s) {
    int32_t m = 0;
    while (s + m <= v2 && u1 + m <= u2 && text[s + m - 1] == text[u1 + m - 1]) ++m;
    best = std::max(best, m);
  }
  return best;
}

std::vector<NaiveRun> runs(std::string_view text) {
  guard(text.size());
  const int32_t n = static_cast<int32_t>(text.size());
  std::vector<NaiveRun> out;
  for (int32_t p = 1; 2 * p <= n; ++p) {
    int32_t i = 0;
    while (i + p < n) {
      if (text[i] != text[i + p]) {
        ++i;
        continue;
      }
      int32_t j = i;
      while (j + p < n && text[j] == text[j + p]) ++j;
      // Streak of matches [i, j-1]; fragment [i, j-1+p] has period p.
      int32_t s = i, e = j - 1 + p;
      if (e - s + 1 >= 2 * p && period(text.substr(s, e - s + 1)) == p)
        out.push_back({s + 1, e + 1, p});
      i = j + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const NaiveRun& a, const NaiveRun& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  return out;
}

NaiveDict::NaiveDict(std::string_view text,
                     const std::vector<std::pair<int32_t, int32_t>>& frags) {
  guard(text.size());
  n_ = static_cast<int32_t>(text.size());
  std::set<std::string> seen;
  for (auto [a, b] : frags) {
    if (a < 1 || b > n_ || b < a)
      throw std::invalid_argument("NaiveDict: bad pattern fragment");
    std::string s(slice(text, a, b));
    if (seen.insert(s).second) pats_.push_back(std::move(s));
  }
  occ_.resize(pats_.size());
  first_end_.resize(pats_.size());
  for (size_t k = 0; k < pats_.size(); ++k) {
    occ_[k] = occurrences(text, pats_[k]);
    auto& fe = first_end_[k];
    fe.assign(n_ + 2, n_ + 1);
    int32_t len = static_cast<int32_t>(pats_[k].size());
    int32_t next = n_ + 1;
    auto it = occ_[k].rbegin();
    for (int32_t i = n_; i >= 1; --i) {
      while (it != occ_[k].rend() && *it >= i) {
        next = std::min(next, *it + len - 1);
        ++it;
      }
      fe[i] = next;
    }
  }
}

bool NaiveDict::occurs_in(int32_t pid, int32_t i, int32_t j) const {
  if (j < i || i < 1 || j > n_) return false;
  return first_end_[pid][i] <= j;
}

int64_t NaiveDict::count_distinct(int32_t i, int32_t j) const {
  if (j < i) return 0;
  int64_t c = 0;
  for (int32_t pid = 0; pid < size(); ++pid) c += occurs_in(pid, i, j) ? 1 : 0;
  return c;
}

int64_t NaiveDict::count(int32_t i, int32_t j) const {
  if (j < i) return 0;
  int64_t c = 0;
  for (int32_t pid = 0; pid < size(); ++pid) {
    int32_t len = static_cast<int32_t>(pats_[pid].size());
    const auto& st = occ_[pid];
    auto lo = std::lower_bound(st.begin(), st.end(), i);
    auto hi = std::upper_bound(st.begin(), st.end(), j - len + 1);
    if (hi > lo) c += hi - lo;
  }
  return c;
}

int64_t count_distinct(std::string_view text,
                       const std::vector<std::pair<int32_t, int32_t>>& frags,
                       int32_t i, int32_t j) {
  return NaiveDict(text, frags).count_distinct(i, j);
}

int64_t count(std::string_view text,
              const std::vector<std::pair<int32_t, int32_t>>& frags, int32_t i,
              int32_t j) {
  return NaiveDict(text, frags).count(i, j);
}

int64_t three_fragments(std::string_view text,
                        const std::vector<std::pair<int32_t, int32_t>>& frags,
                        int32_t s1, int32_t e1, int32_t s2, int32_t e2,
                        int32_t s3, int32_t e3) {
  NaiveDict d(text, frags);
  int64_t total = 0;
  for (int32_t pid = 0; pid < d.size(); ++pid) {
    int32_t len = static_cast<int32_t>(d.content(pid).size());
    bool essential = false;
    for (int32_t a : d.starts(pid)) {
      int32_t b = a + len - 1;
      if (a >= s1 && a <= e1 && b >= s3 && b <= e3) {
        essential = true;
        break;
      }
    }
    if (!essential) continue;
    if (d.occurs_in(pid, s1, e2) || d.occurs_in(pid, s2, e3)) continue;
    ++total;
  }
  return total;
}

NaiveSquares::NaiveSquares(std::string_view text) {
  guard(text.size());
  const int32_t n = static_cast<int32_t>(text.size());
  std::map<std::string_view, int32_t> ids;
  for (int32_t half = 1; 2 * half <= n; ++half) {
    for (int32_t s = 0; s + 2 * half <= n; ++s) {
      if (text.compare(s, half, text.substr(s + half, half)) != 0) continue;
      auto sq = text.substr(s, 2 * half);
      auto [it, fresh] = ids.emplace(sq, static_cast<int32_t>(lens_.size()));
      if (fresh) {
        lens_.push_back(2 * half);
        starts_.emplace_back();
      }
      starts_[it->second].push_back(s + 1);
    }
  }
}

int64_t NaiveSquares::count(int32_t i, int32_t j) const {
  if (j < i) return 0;
  int64_t total = 0;
  for (size_t k = 0; k < lens_.size(); ++k) {
    const auto& st = starts_[k];
    auto lo = std::lower_bound(st.begin(), st.end(), i);
    if (lo != st.end() && *lo + lens_[k] - 1 <= j) ++total;
  }
  return total;
}

int64_t squares_count(std::string_view text, int32_t i, int32_t j) {
  return NaiveSquares(text).count(i, j);
}

int64_t run_squares(std::string_view f) {
  guard(f.size());
  const int32_t n = static_cast<int32_t>(f.size());
  const int32_t p = period(f);
  if (2 * p > n) throw std::invalid_argument("run_squares: aperiodic input");
  std::set<std::string_view> distinct;
  for (int32_t k = 1; 2 * k * p <= n; ++k)
    for (int32_t s = 0; s + 2 * k * p <= n; ++s)
      distinct.insert(f.substr(s, 2 * k * p));
  return static_cast<int64_t>(distinct.size());
}

int64_t bsq(std::string_view f, int32_t f1, int32_t f2) {
  guard(f.size());
  const int32_t n = static_cast<int32_t>(f.size());
  const int32_t p = period(f);
  if (2 * p > n) throw std::invalid_argument("bsq: aperiodic input");
  if (f1 < 0 || f1 > p || f2 < 0 || f2 > p)
    throw std::invalid_argument("bsq: prefix or suffix longer than the period");
  std::set<std::string_view> distinct;
  for (int32_t k = 1; 2 * k * p <= n; ++k)
    for (int32_t s = 0; s + 2 * k * p <= n; ++s) {
      int32_t e = s + 2 * k * p;  // one past the end, 0-based
      if (s < f1 || e > n - f2) distinct.insert(f.substr(s, 2 * k * p));
    }
  return static_cast<int64_t>(distinct.size());
}

int64_t bsq_prime_sum(int32_t flen, int32_t p, int32_t prefix_len) {
  int64_t total = 0;
  for (int32_t i = 1; i <= prefix_len; ++i) total += (flen - i + 1) / (2 * p);
  return total;
}

int64_t periodic_count(std::string_view text,
                       const std::vector<std::pair<int32_t, int32_t>>& frags,
                       int32_t us, int32_t ue) {
  NaiveDict d(text, frags);
  auto u = slice(text, us, ue);
  int32_t pu = period(u);
  if (2 * pu > static_cast<int32_t>(u.size()))
    throw std::invalid_argument("periodic_count: aperiodic fragment");
  int64_t total = 0;
  for (int32_t pid = 0; pid < d.size(); ++pid) {
    const std::string& s = d.content(pid);
    int32_t pp = period(s);
    if (4 * pp > static_cast<int32_t>(s.size())) continue;  // not highly periodic
    if (pp != pu) continue;
    if (!occurrences(u, s).empty()) ++total;
  }
  return total;
}

}  // namespace idm::oracle
