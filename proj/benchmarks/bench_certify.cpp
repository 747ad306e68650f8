#include <benchmark/benchmark.h>

#include <random>

#include "glrank/certify.hpp"
#include "glrank/mc_sim.hpp"

using namespace glrank;

static void BM_PseudoKernel(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const Graph g = erdos_renyi_connected(p, 0.5, 1);
  std::mt19937_64 rng(2);
  const RankFactor a = random_integer_factor(p / 3, p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_kernel(g, a).dim());
}
BENCHMARK(BM_PseudoKernel)->Arg(8)->Arg(12)->Arg(16);

static void BM_CheckPseudo(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const Graph g = cycle_graph(p);
  const RankFactor a = sample_covariance(p, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_pseudo(g, a).exists);
}
BENCHMARK(BM_CheckPseudo)->Arg(6)->Arg(10)->Arg(20);

static void BM_CheckPseudoRecursive(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const Graph g = cycle_graph(p);
  const RankFactor a = sample_covariance(p, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_pseudo_recursive(g, a).exists);
}
BENCHMARK(BM_CheckPseudoRecursive)->Arg(6)->Arg(10)->Arg(20);

static void BM_CheckGaussian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = erdos_renyi_connected(12, 0.5, 99);
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_gaussian(g, sample_covariance(12, n, t++)).exists);
}
BENCHMARK(BM_CheckGaussian)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GenericCompletionRankTrial(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  std::uint64_t s = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generic_completion_rank_trial(g, s++));
}
BENCHMARK(BM_GenericCompletionRankTrial)->Arg(3)->Arg(4)->Arg(5);
