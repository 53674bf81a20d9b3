#include <doctest.h>

#include "helpers.hpp"
#include "idm/internal_pm.hpp"
#include "idm/oracle.hpp"

using namespace idm;
using testutil::Rng;

TEST_CASE("bounded lcp fixtures") {
  TextIndex ti{Text("adaaaabaabbaac")};
  CHECK(bounded_lcp(ti, Fragment(5, 12), Fragment(6, 12)) == 3);
  CHECK(bounded_lcp(ti, Fragment(5, 12), Fragment::empty_at(6)) == 0);
  // containment: whole pattern occurs inside the window
  CHECK(bounded_lcp(ti, Fragment(3, 4), Fragment(8, 12)) == 2);
  CHECK_THROWS_AS(bounded_lcp(ti, Fragment::empty_at(3), Fragment(1, 5)),
                  std::invalid_argument);
}

TEST_CASE("bounded lcp equals the naive maximum everywhere") {
  Rng rng(0xB1C);
  for (int trial = 0; trial < 18; ++trial) {
    std::string s = testutil::random_text(rng, rng.ri(1, 30), rng.ri(1, 3));
    TextIndex ti{Text(s)};
    int32_t n = (int32_t)s.size();
    for (int32_t u1 = 1; u1 <= n; ++u1)
      for (int32_t u2 = u1; u2 <= n; ++u2)
        for (int32_t v1 = 1; v1 <= n; ++v1)
          for (int32_t v2 = v1; v2 <= n; ++v2)
            CHECK(bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2)) ==
                  oracle::bounded_lcp(s, u1, u2, v1, v2));
  }
}

TEST_CASE("bounded lcp on larger random pairs") {
  Rng rng(0x1CE);
  std::string s = testutil::random_text(rng, 500, 2);
  TextIndex ti{Text(s)};
  for (int q = 0; q < 1000; ++q) {
    int32_t u1 = rng.ri(1, 500), u2 = rng.ri(u1, 500);
    int32_t v1 = rng.ri(1, 500), v2 = rng.ri(v1, 500);
    CHECK(bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2)) ==
          oracle::bounded_lcp(s, u1, u2, v1, v2));
  }
}

TEST_CASE("bounded lcp grows with the target window") {
  Rng rng(0x90);
  for (int trial = 0; trial < 60; ++trial) {
    std::string s = testutil::random_text(rng, rng.ri(2, 64), rng.ri(1, 3));
    TextIndex ti{Text(s)};
    int32_t n = (int32_t)s.size();
    int32_t u1 = rng.ri(1, n), u2 = rng.ri(u1, n);
    int32_t v1 = rng.ri(1, n), v2 = rng.ri(v1, n);
    int32_t base = bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2));
    if (v1 > 1)
      CHECK(bounded_lcp(ti, Fragment(u1, u2), Fragment(v1 - 1, v2)) >= base);
    if (v2 < n)
      CHECK(bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2 + 1)) >= base);
  }
}

TEST_CASE("occurrence test inside a window") {
  TextIndex ti{Text("adaaaabaabbaac")};
  CHECK(exists(ti, Fragment(3, 4), 5, 12));
  CHECK(!exists(ti, Fragment(3, 6), 5, 12));   // aaaa does not fit
  CHECK(!exists(ti, Fragment(9, 12), 2, 6));   // abba outside
  CHECK(!exists(ti, Fragment(1, 14), 2, 14));  // longer than the window

  Rng rng(0xEE);
  for (int trial = 0; trial < 12; ++trial) {
    std::string s = testutil::random_text(rng, rng.ri(1, 24), rng.ri(1, 3));
    TextIndex ti2{Text(s)};
    int32_t n = (int32_t)s.size();
    for (int32_t a = 1; a <= n; ++a)
      for (int32_t b = a; b <= n; ++b)
        for (int32_t i = 1; i <= n; ++i)
          for (int32_t j = i; j <= n; ++j) {
            bool naive = !oracle::occurrences(
                              std::string_view(s).substr(i - 1, j - i + 1),
                              s.substr(a - 1, b - a + 1))
                              .empty();
            CHECK(exists(ti2, Fragment(a, b), i, j) == naive);
          }
  }
}

TEST_CASE("predecessor counting") {
  std::vector<int32_t> lens{2, 4};
  CHECK(predecessor_count(lens, 3) == 1);
  CHECK(predecessor_count(lens, 0) == 0);
  CHECK(predecessor_count(lens, 4) == 2);
  CHECK(predecessor_count(lens, 100) == 2);
  CHECK(predecessor_count(std::vector<int32_t>{}, 5) == 0);
}
