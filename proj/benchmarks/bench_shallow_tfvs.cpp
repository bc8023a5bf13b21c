#include <benchmark/benchmark.h>

#include "splitkit/catalog.hpp"
#include "splitkit/shallow_tfvs.hpp"

using namespace splitkit;

static void BM_ShallowRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const Graph g = random_graph_m(n, 2 * n, 20240601);
  for (auto _ : state) benchmark::DoNotOptimize(solve_shallow_tfvs(g, k));
}
BENCHMARK(BM_ShallowRandom)->ArgsProduct({{10, 15, 20}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

static void BM_ShallowCompleteGraph(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_shallow_tfvs(g, 2));
}
BENCHMARK(BM_ShallowCompleteGraph)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
