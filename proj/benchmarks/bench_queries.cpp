#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "idm/approx.hpp"
#include "idm/exact.hpp"
#include "idm/squares.hpp"

using namespace idm;

namespace {

constexpr int32_t kN = 1 << 16;
constexpr int32_t kD = 512;

struct Shared {
  MirroredText mt;
  Dictionary dict;
  std::shared_ptr<DeltaEngine> eng;

  Shared() : mt(make_text()), dict(mt.fwd, make_frags()), eng(std::make_shared<DeltaEngine>(mt, dict)) {}

  static Text make_text() {
    std::mt19937_64 rng(21);
    std::string s(kN, 'a');
    for (auto& c : s) c = static_cast<char>('a' + rng() % 2);
    return Text(std::move(s));
  }
  static std::vector<Fragment> make_frags() {
    std::mt19937_64 rng(22);
    std::vector<Fragment> out;
    for (int32_t q = 0; q < kD; ++q) {
      int32_t a = 1 + rng() % kN;
      int32_t len = 1 + rng() % std::min(48, kN - a + 1);
      out.push_back(Fragment(a, a + len - 1));
    }
    return out;
  }
  static Shared& get() {
    static Shared s;
    return s;
  }
};

template <typename Index>
void run_queries(benchmark::State& state, const Index& idx) {
  std::mt19937_64 rng(31);
  for (auto _ : state) {
    int32_t i = 1 + rng() % kN, j = i + rng() % (kN - i + 1);
    benchmark::DoNotOptimize(idx.count_distinct(i, j));
  }
}

void BM_ApproxQuery(benchmark::State& state) {
  static ApproxIndex idx(Shared::get().mt, Shared::get().dict);
  run_queries(state, idx);
}
BENCHMARK(BM_ApproxQuery);

void BM_CanonicalQuery(benchmark::State& state) {
  auto m = static_cast<int32_t>(state.range(0));
  CanonicalIndex idx(Shared::get().eng, m);
  run_queries(state, idx);
  state.counters["table_bytes"] = static_cast<double>(idx.table_bytes());
}
BENCHMARK(BM_CanonicalQuery)->Arg(16)->Arg(64)->Arg(256);

void BM_PathSetQuery(benchmark::State& state) {
  auto m = static_cast<int32_t>(state.range(0));
  PathSetIndex idx(Shared::get().eng, m);
  run_queries(state, idx);
}
BENCHMARK(BM_PathSetQuery)->Arg(16)->Arg(256);

void BM_SquaresQuery(benchmark::State& state) {
  static SquaresIndex idx(Shared::get().mt.fwd);
  run_queries(state, idx);
}
BENCHMARK(BM_SquaresQuery);

}  // namespace
