#include <benchmark/benchmark.h>

#include "eop/generators.hpp"
#include "eop/oracle.hpp"
#include "eop/recognition.hpp"
#include "eop/solver_block.hpp"
#include "eop/solver_pig.hpp"
#include "eop/solver_split.hpp"

using namespace eop;

static void BM_ComputeBco(benchmark::State& state) {
  const Graph g = gen_proper_interval(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(compute_bco(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeBco)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_SolvePig(benchmark::State& state) {
  const Graph g = gen_proper_interval(static_cast<int>(state.range(0)), 0.5, 7);
  const auto bco = compute_bco(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_pig(g, *bco));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePig)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_SolveBlock(benchmark::State& state) {
  const Graph g = gen_block(static_cast<int>(state.range(0)), 4, 7);
  const auto tree = build_cut_tree(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_block(g, *tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveBlock)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_SolveSplit(benchmark::State& state) {
  const Graph g = gen_split(static_cast<int>(state.range(0)), 10 * static_cast<int>(state.range(0)),
                            0.05, 7);
  const auto part = split_partition(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_split(g, *part));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveSplit)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_Oracle(benchmark::State& state) {
  const Graph g = gen_block(static_cast<int>(state.range(0)), 3, 11);
  SearchBudget budget;
  for (auto _ : state) {
    if (g.edge_count() <= budget.max_edges) benchmark::DoNotOptimize(brute_force_eop(g, budget));
  }
}
BENCHMARK(BM_Oracle)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
