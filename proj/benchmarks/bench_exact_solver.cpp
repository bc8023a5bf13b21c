#include <benchmark/benchmark.h>

#include "splitkit/catalog.hpp"
#include "splitkit/exact_solver.hpp"

using namespace splitkit;

static void BM_TriangleFreeComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  const ForbiddenFamily f = ForbiddenFamily::finite({complete_graph(3)});
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, f, 3));
}
BENCHMARK(BM_TriangleFreeComplete)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_ClusterP4(benchmark::State& state) {
  const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
  const ForbiddenFamily f = ForbiddenFamily::finite({path_graph(3)});
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, f, 3));
}
BENCHMARK(BM_ClusterP4)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
