#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/sde.hpp"

using namespace levym;

namespace {

SdeSpec brownian_spec() {
  SdeSpec spec;
  spec.d = 1;
  spec.x0 = {0.0};
  spec.drift = [](double, const double*, double* l) { l[0] = 0.0; };
  spec.sigma = [](double) { return 1.0; };
  return spec;
}

SdeSpec ou_spec() {
  SdeSpec spec = brownian_spec();
  spec.drift = [](double, const double* x, double* l) { l[0] = -x[0]; };
  return spec;
}

}  // namespace

TEST_CASE("driftless diffusion: exponential functional") {
  auto f = [](const double* x) { return std::exp(x[0]); };
  ShiftFunctionals sim =
      simulate_sde_coupling(brownian_spec(), f, 2.0, {0.0}, 1.0, 100000, 512, 3);
  // E e^{B_1} = e^{1/2}
  CHECK(std::abs(sim.mean_f - std::exp(0.5)) <= 3.0 * sim.se_f + 2e-3);
}

TEST_CASE("Ornstein-Uhlenbeck second moment") {
  auto f = [](const double* x) { return x[0] * x[0] + 1.0; };  // keep log f finite
  ShiftFunctionals sim = simulate_sde_coupling(ou_spec(), f, 2.0, {0.0}, 1.0, 200000,
                                               2048, 17);
  const double exact = 0.5 * (1.0 - std::exp(-2.0)) + 1.0;  // stationary ramp-up variance
  CHECK(std::abs(sim.mean_f - exact) <= 3.0 * sim.se_f + 2e-3);
}

TEST_CASE("zero shift evaluates identically on the same paths") {
  auto f = [](const double* x) { return 1.0 + std::exp(-x[0] * x[0]); };
  ShiftFunctionals sim =
      simulate_sde_coupling(ou_spec(), f, 2.0, {0.0}, 1.0, 20000, 256, 9);
  CHECK(sim.mean_f == sim.mean_f_shift);
  CHECK(sim.se_f == sim.se_f_shift);
}

TEST_CASE("coupling inequality holds on one configuration") {
  auto f = [](const double* x) { return 1.0 + std::exp(-x[0] * x[0]); };
  ShiftFunctionals sim =
      simulate_sde_coupling(ou_spec(), f, 2.0, {0.5}, 1.0, 100000, 2048, 4);
  // I(1) = int_0^1 (r+1)^2 dr = 7/3 for gamma = K = 1
  const double I = 7.0 / 3.0;
  HarnackCheck log_check = verify_shift_log_harnack(sim, 0.25 * I / 2.0);
  CHECK(log_check.holds);
  CHECK(log_check.margin >= 0.0);
  HarnackCheck pow_check = verify_shift_power_harnack(sim, 2.0, 2.0 * 0.25 * I / 2.0);
  CHECK(pow_check.holds);
}

TEST_CASE("trivial functional makes both sides equal") {
  auto f = [](const double*) { return 1.0; };
  ShiftFunctionals sim =
      simulate_sde_coupling(ou_spec(), f, 2.0, {0.5}, 1.0, 5000, 128, 21);
  HarnackCheck check = verify_shift_log_harnack(sim, 0.3);
  CHECK(check.holds);
  CHECK(check.lhs == doctest::Approx(0.0));
  CHECK(check.margin == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("determinism and validation") {
  auto f = [](const double* x) { return 1.0 + x[0] * x[0]; };
  ShiftFunctionals a = simulate_sde_coupling(ou_spec(), f, 2.0, {0.5}, 1.0, 10000, 128, 5);
  ShiftFunctionals b = simulate_sde_coupling(ou_spec(), f, 2.0, {0.5}, 1.0, 10000, 128, 5);
  CHECK(a.mean_f == b.mean_f);
  CHECK(a.mean_fp_shift == b.mean_fp_shift);

  ShiftFunctionals warn =
      simulate_sde_coupling(ou_spec(), f, 2.0, {0.5}, 1.0, 1000, 64, 5);
  CHECK(warn.step_warning);

  SdeSpec bad = ou_spec();
  bad.x0 = {0.0, 0.0};
  CHECK_THROWS_AS(simulate_sde_coupling(bad, f, 2.0, {0.5}, 1.0, 100, 16, 1),
                  std::invalid_argument);
}
