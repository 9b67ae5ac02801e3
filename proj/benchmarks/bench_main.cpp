#include "f2c/cayley.hpp"
#include "f2c/cliquechrom.hpp"
#include "f2c/freiman.hpp"
#include "f2c/sumset.hpp"

#include <benchmark/benchmark.h>

using namespace f2c;

static void BM_MaxClique(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto G = sample_cayley(n, seed++);
    state.ResumeTiming();
    const auto res = max_clique(G);
    nodes += res.nodes_explored;
    benchmark::DoNotOptimize(res.size);
  }
  state.counters["nodes/graph"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_MaxClique)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_SubspaceCliques(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto A = sample_generators(n, seed++);
    benchmark::DoNotOptimize(subspace_cliques(A).counts.size());
  }
}
BENCHMARK(BM_SubspaceCliques)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

static void BM_LargestSubspaceClique(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(largest_subspace_clique(sample_generators(n, seed++)).dim());
}
BENCHMARK(BM_LargestSubspaceClique)->DenseRange(8, 11, 1)->Unit(benchmark::kMicrosecond);

static void BM_Census(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(census_skl(n, k, threads).total);
}
BENCHMARK(BM_Census)
    ->Args({4, 6, 1})
    ->Args({5, 5, 1})
    ->Args({5, 5, 4})
    ->Args({6, 4, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ChromaticBracket(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto G = sample_cayley(n, seed++);
    benchmark::DoNotOptimize(chromatic_bracket(G).upper);
  }
}
BENCHMARK(BM_ChromaticBracket)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Sumset(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto X = sample_generators(n, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(restricted_sumset(X, X).size());
}
BENCHMARK(BM_Sumset)->DenseRange(6, 12, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
