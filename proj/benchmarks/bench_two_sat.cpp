#include <benchmark/benchmark.h>

#include <random>

#include "splitkit/two_sat.hpp"

using namespace splitkit;

// x0 -> x1 -> ... -> xn with x0 forced: one long SCC-free chain.
static void BM_ImplicationChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TwoSat s(n + 1);
  for (std::size_t i = 0; i < n; ++i) s.add_clause(neg(i), pos(i + 1));
  s.add_unit(pos(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.solve());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ImplicationChain)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

static void BM_RandomTwoSat(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  TwoSat s(vars);
  for (std::size_t c = 0; c < vars; ++c)
    s.add_clause({rng() % vars, static_cast<bool>(rng() & 1u)}, {rng() % vars, static_cast<bool>(rng() & 1u)});
  for (auto _ : state) benchmark::DoNotOptimize(s.solve());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RandomTwoSat)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
