#include <benchmark/benchmark.h>

#include <random>

#include "bidx/canonical.h"
#include "bidx/enumerate.h"
#include "bidx/graph.h"
#include "bidx/indices.h"

namespace bidx {
namespace {

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return BuildGraph(n, edges);
}

void BM_Canonicalize(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(g));
}
BENCHMARK(BM_Canonicalize)->DenseRange(6, 12, 2);

void BM_CanonicalizeRegular(benchmark::State& state) {
  const Graph g = CycleGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Canonicalize(g));
}
BENCHMARK(BM_CanonicalizeRegular)->DenseRange(6, 12, 2);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    GraphCatalog catalog(workers);
    std::size_t total = 0;
    for (int m = n - 1; m <= n + 3; ++m) total += catalog.Connected(n, m).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateConnected)
    ->Args({7, 1})
    ->Args({8, 1})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_EvaluateBid(benchmark::State& state) {
  const Graph g = RandomGraph(12, 0.5, 11);
  const IndexSpec spec = state.range(0) == 0 ? IndexSpec::Chi(2) : IndexSpec::Chi(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateBid(spec, g));
}
BENCHMARK(BM_EvaluateBid)->Arg(0)->Arg(1);

}  // namespace
}  // namespace bidx

BENCHMARK_MAIN();
