#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idm::oracle {

// Brute-force reference implementations, definitionally correct and
// independent of the indexed structures. Quadratic and cubic costs are
// accepted; inputs longer than kMaxN are rejected.

constexpr int32_t kMaxN = 2000;

int32_t period(std::string_view s);
bool is_periodic(std::string_view s);

/// 1-based starting positions of every occurrence of pat in text.
std::vector<int32_t> occurrences(std::string_view text, std::string_view pat);

int32_t lce(std::string_view text, int32_t i, int32_t j);
int32_t minimal_rotation(std::string_view s);

/// Longest prefix of text[u1..u2] occurring inside text[v1..v2] (1-based).
int32_t bounded_lcp(std::string_view text, int32_t u1, int32_t u2, int32_t v1,
                    int32_t v2);

struct NaiveRun {
  int32_t start, end, period;  // 1-based inclusive
  bool operator==(const NaiveRun&) const = default;
};
std::vector<NaiveRun> runs(std::string_view text);

/// Dictionary fixture for bulk window queries. Patterns are (start, end)
/// 1-based fragments of the text; duplicates by content collapse.
class NaiveDict {
 public:
  NaiveDict(std::string_view text, const std::vector<std::pair<int32_t, int32_t>>& frags);

  int32_t size() const { return static_cast<int32_t>(pats_.size()); }
  const std::string& content(int32_t pid) const { return pats_[pid]; }
  const std::vector<int32_t>& starts(int32_t pid) const { return occ_[pid]; }

  bool occurs_in(int32_t pid, int32_t i, int32_t j) const;
  int64_t count_distinct(int32_t i, int32_t j) const;
  int64_t count(int32_t i, int32_t j) const;  // with multiplicity

 private:
  int32_t n_;
  std::vector<std::string> pats_;
  std::vector<std::vector<int32_t>> occ_;        // sorted starts
  std::vector<std::vector<int32_t>> first_end_;  // [pid][i] = min end, start >= i
};

int64_t count_distinct(std::string_view text,
                       const std::vector<std::pair<int32_t, int32_t>>& frags,
                       int32_t i, int32_t j);
int64_t count(std::string_view text,
              const std::vector<std::pair<int32_t, int32_t>>& frags, int32_t i,
              int32_t j);

/// Patterns with an occurrence starting in F1 = [s1..e1] and ending in
/// F3 = [s3..e3] that occur neither inside F1F2 = [s1..e2] nor inside
/// F2F3 = [s2..e3]; the three fragments are consecutive.
int64_t three_fragments(std::string_view text,
                        const std::vector<std::pair<int32_t, int32_t>>& frags,
                        int32_t s1, int32_t e1, int32_t s2, int32_t e2,
                        int32_t s3, int32_t e3);

/// Distinct square substrings with an occurrence inside the window, indexed
/// once per text for bulk sweeps.
class NaiveSquares {
 public:
  explicit NaiveSquares(std::string_view text);

  int32_t distinct_total() const { return static_cast<int32_t>(lens_.size()); }
  int64_t count(int32_t i, int32_t j) const;

 private:
  std::vector<int32_t> lens_;                 // per distinct square: its length
  std::vector<std::vector<int32_t>> starts_;  // sorted occurrence starts
};

int64_t squares_count(std::string_view text, int32_t i, int32_t j);

/// Number of distinct squares of F interpreted as a standalone run: square
/// substrings whose root length is a multiple of per(F).
int64_t run_squares(std::string_view f);

/// Of those, the ones with an occurrence starting in the first f1 positions
/// or ending in the last f2 positions of F.
int64_t bsq(std::string_view f, int32_t f1, int32_t f2);
int64_t bsq_prime_sum(int32_t flen, int32_t p, int32_t prefix_len);

/// Distinct highly periodic patterns (per <= |P|/4) with the same smallest
/// period as U that occur inside U = text[us..ue].
int64_t periodic_count(std::string_view text,
                       const std::vector<std::pair<int32_t, int32_t>>& frags,
                       int32_t us, int32_t ue);

}  // namespace idm::oracle
