#include <benchmark/benchmark.h>

#include "glrank/graph.hpp"
#include "glrank/graph_invariants.hpp"

using namespace glrank;

static void BM_Degeneracy(benchmark::State& state) {
  const Graph g = erdos_renyi_connected(static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy(g));
}
BENCHMARK(BM_Degeneracy)->Arg(20)->Arg(100)->Arg(400);

static void BM_SubgraphConnectivity(benchmark::State& state) {
  const Graph g = erdos_renyi_connected(static_cast<std::size_t>(state.range(0)), 0.4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_connectivity(g));
}
BENCHMARK(BM_SubgraphConnectivity)->Arg(8)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_CliqueNumber(benchmark::State& state) {
  const Graph g = erdos_renyi_connected(static_cast<std::size_t>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(30)->Arg(60)->Arg(120);

static void BM_IsChordal(benchmark::State& state) {
  const Graph g = random_chordal(static_cast<std::size_t>(state.range(0)), 6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_IsChordal)->Arg(50)->Arg(200);
