#include <benchmark/benchmark.h>

#include "glrank/estimators.hpp"
#include "glrank/mc_sim.hpp"

using namespace glrank;

static void BM_Fit(benchmark::State& state) {
  const auto kind = static_cast<ObjectiveKind>(state.range(0));
  const Graph g = erdos_renyi_connected(10, 0.4, 7);
  const Objective obj(kind, sample_covariance(10, 20, 8).to_sym());
  for (auto _ : state) benchmark::DoNotOptimize(fit(obj, g).objective_value);
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Fit)
    ->Arg(static_cast<int>(ObjectiveKind::concord))
    ->Arg(static_cast<int>(ObjectiveKind::conspace))
    ->Arg(static_cast<int>(ObjectiveKind::gaussian))
    ->Unit(benchmark::kMillisecond);

static void BM_CoordinateSweep(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const Graph g = erdos_renyi_connected(p, 0.3, 7);
  const Objective obj(ObjectiveKind::concord, sample_covariance(p, 2 * p, 8).to_sym());
  SymMatrix w = initial_point(obj);
  for (auto _ : state) benchmark::DoNotOptimize(coordinate_sweep(obj, g, w));
}
BENCHMARK(BM_CoordinateSweep)->Arg(10)->Arg(30);
