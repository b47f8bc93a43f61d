#include <benchmark/benchmark.h>

#include "levym/bounds.hpp"
#include "levym/families.hpp"
#include "levym/moments.hpp"

using namespace levym;

static void BM_SubNegMoment(benchmark::State& state) {
  BernsteinFunction phi = stable_bernstein(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sub_neg_moment_exact(phi, 0.25, 1.0).value);
  }
}
BENCHMARK(BM_SubNegMoment);

static void BM_SubExpNegMoment(benchmark::State& state) {
  BernsteinFunction phi = stable_bernstein(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sub_exp_neg_moment_exact(phi, 0.25, 0.1, 1.0).value);
  }
}
BENCHMARK(BM_SubExpNegMoment);

static void BM_LevyAbsMoment(benchmark::State& state) {
  CharacteristicExponent psi = symmetric_stable_symbol(1.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(levy_abs_moment_exact(psi, 0.75, 1.0).value);
  }
}
BENCHMARK(BM_LevyAbsMoment);

static void BM_BvBound(benchmark::State& state) {
  LevyTriplet trip = subordinator_triplet(gamma_bernstein(1.0, 1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_abs_moment_bv(trip, 0.5, 10.0));
  }
}
BENCHMARK(BM_BvBound);

static void BM_IndexReport(benchmark::State& state) {
  BernsteinFunction phi = stable_bernstein(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_indices(phi).rho_inf.value);
  }
}
BENCHMARK(BM_IndexReport);
