#include <benchmark/benchmark.h>

#include "levym/montecarlo.hpp"
#include "levym/sde.hpp"

using namespace levym;

static void BM_KanterSampler(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_stable_subordinator(0.5, 1.0, n, seed++).values);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_KanterSampler)->Arg(1 << 12)->Arg(1 << 16);

static void BM_SubordinateBrownian(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_subordinate_brownian(1.5, 1, 1.0, n, seed++).values);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SubordinateBrownian)->Arg(1 << 12)->Arg(1 << 16);

static void BM_EulerMaruyama(benchmark::State& state) {
  SdeSpec spec;
  spec.d = 1;
  spec.x0 = {0.0};
  spec.drift = [](double, const double* x, double* l) { l[0] = -x[0]; };
  spec.sigma = [](double) { return 1.0; };
  auto f = [](const double* x) { return 1.0 + std::exp(-x[0] * x[0]); };
  const std::size_t paths = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_sde_coupling(spec, f, 2.0, {0.5}, 1.0, paths, 512, seed++).mean_f);
  }
  state.SetItemsProcessed(state.iterations() * paths * 512);
}
BENCHMARK(BM_EulerMaruyama)->Arg(1 << 10)->Arg(1 << 13);

BENCHMARK_MAIN();
