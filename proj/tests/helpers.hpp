#pragma once

#include <random>
#include <string>
#include <vector>

#include "idm/common.hpp"

namespace testutil {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  int32_t ri(int32_t lo, int32_t hi) {
    return lo + static_cast<int32_t>(gen() % static_cast<uint64_t>(hi - lo + 1));
  }
};

inline std::string random_text(Rng& rng, int32_t n, int32_t sigma) {
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng.ri(0, sigma - 1));
  return s;
}

inline std::vector<std::pair<int32_t, int32_t>> random_fragments(Rng& rng, int32_t n,
                                                                 int32_t d) {
  std::vector<std::pair<int32_t, int32_t>> out;
  for (int32_t q = 0; q < d; ++q) {
    int32_t a = rng.ri(1, n);
    out.push_back({a, rng.ri(a, n)});
  }
  return out;
}

inline std::vector<idm::Fragment> as_fragments(
    const std::vector<std::pair<int32_t, int32_t>>& prs) {
  std::vector<idm::Fragment> out;
  for (auto& [a, b] : prs) out.push_back(idm::Fragment(a, b));
  return out;
}

inline std::string fibonacci_word(int32_t n) {
  std::string a = "a", b = "ab";
  while (static_cast<int32_t>(b.size()) < n) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b.substr(0, n);
}

inline std::string thue_morse(int32_t n) {
  std::string s;
  s.reserve(n);
  for (int32_t i = 0; i < n; ++i)
    s.push_back(__builtin_popcount(static_cast<unsigned>(i)) % 2 ? 'b' : 'a');
  return s;
}

}  // namespace testutil
