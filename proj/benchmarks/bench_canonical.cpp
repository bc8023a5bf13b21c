#include <benchmark/benchmark.h>

#include "splitkit/canonical.hpp"
#include "splitkit/catalog.hpp"

using namespace splitkit;

static void BM_CanonicalRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->DenseRange(6, 12, 2);

// vertex-transitive graphs defeat refinement and force individualization
static void BM_CanonicalCubic(benchmark::State& state, const char* name) {
  const Graph g = cubic_graph(name);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK_CAPTURE(BM_CanonicalCubic, petersen, "petersen");
BENCHMARK_CAPTURE(BM_CanonicalCubic, prism, "prism");
BENCHMARK_CAPTURE(BM_CanonicalCubic, k33, "K33");

BENCHMARK_MAIN();
