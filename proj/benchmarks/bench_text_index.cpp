#include <benchmark/benchmark.h>

#include <random>

#include "idm/internal_pm.hpp"
#include "idm/text_index.hpp"

using namespace idm;

namespace {

std::string random_binary(int32_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % 2);
  return s;
}

void BM_BuildTextIndex(benchmark::State& state) {
  std::string s = random_binary(static_cast<int32_t>(state.range(0)), 7);
  for (auto _ : state) {
    TextIndex ti{Text(s)};
    benchmark::DoNotOptimize(ti.runs().size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTextIndex)->Range(1 << 10, 1 << 17)->Complexity();

void BM_Lce(benchmark::State& state) {
  const int32_t n = static_cast<int32_t>(state.range(0));
  TextIndex ti{Text(random_binary(n, 3))};
  std::mt19937_64 rng(11);
  for (auto _ : state) {
    int32_t i = 1 + rng() % n, j = 1 + rng() % n;
    benchmark::DoNotOptimize(ti.lce(i, j));
  }
}
BENCHMARK(BM_Lce)->Arg(1 << 16);

void BM_BoundedLcp(benchmark::State& state) {
  const int32_t n = static_cast<int32_t>(state.range(0));
  TextIndex ti{Text(random_binary(n, 5))};
  std::mt19937_64 rng(13);
  for (auto _ : state) {
    int32_t u1 = 1 + rng() % n, u2 = u1 + rng() % (n - u1 + 1);
    int32_t v1 = 1 + rng() % n, v2 = v1 + rng() % (n - v1 + 1);
    benchmark::DoNotOptimize(bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2)));
  }
}
BENCHMARK(BM_BoundedLcp)->Arg(1 << 16);

void BM_RunOf(benchmark::State& state) {
  const int32_t n = static_cast<int32_t>(state.range(0));
  TextIndex ti{Text(random_binary(n, 9))};
  std::mt19937_64 rng(17);
  for (auto _ : state) {
    int32_t a = 1 + rng() % n, b = a + rng() % (n - a + 1);
    benchmark::DoNotOptimize(ti.run_of(Fragment(a, b)));
  }
}
BENCHMARK(BM_RunOf)->Arg(1 << 16);

}  // namespace
