#include <benchmark/benchmark.h>

#include <cmath>

#include "levym/families.hpp"
#include "levym/quadrature.hpp"

using namespace levym;

static void BM_SemiInfGamma(benchmark::State& state) {
  const double a = state.range(0) / 100.0 - 1.0;  // singularity exponent
  for (auto _ : state) {
    auto r = integrate_semiinf(
        [a](double u) { return std::pow(u, a) * std::exp(-u); }, a);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SemiInfGamma)->Arg(25)->Arg(50)->Arg(90);

static void BM_PhiQuadrature(benchmark::State& state) {
  BernsteinFunction phi(0.0, gamma_measure(1.0, 1.0), {}, "gamma-raw");
  const double u = std::pow(10.0, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.value_quadrature(u));
  }
}
BENCHMARK(BM_PhiQuadrature)->Arg(-3)->Arg(0)->Arg(3)->Arg(6);

static void BM_Continuation(benchmark::State& state) {
  BernsteinFunction phi(0.0, gamma_measure(1.0, 1.0), {}, "gamma-raw");
  const double xi = std::pow(10.0, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.continuation(xi));
  }
}
BENCHMARK(BM_Continuation)->Arg(0)->Arg(2)->Arg(4);
