#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "levym/families.hpp"
#include "levym/indices.hpp"

using namespace levym;

TEST_CASE("stable families recover the stability index everywhere") {
  IndexReport rep = estimate_indices(stable_bernstein(0.5));
  for (const IndexEstimate* e : {&rep.sigma0, &rep.rho0, &rep.sigma_inf, &rep.rho_inf,
                                 &rep.beta0, &rep.beta_inf, &rep.delta0, &rep.delta_inf}) {
    CHECK(e->value == doctest::Approx(0.5).epsilon(0.04));
    CHECK(e->resolved);
  }
  // exact powers regress to machine precision
  CHECK(rep.rho_inf.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.sigma0.value == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("gamma exponent: linear at zero, logarithmic at infinity") {
  IndexReport rep = estimate_indices(gamma_bernstein(1.0, 1.0));
  CHECK(std::abs(rep.sigma0.value - 1.0) <= 0.05);
  CHECK(std::abs(rep.rho0.value - 1.0) <= 0.05);
  CHECK(std::abs(rep.sigma_inf.value) <= 0.05);
  CHECK(std::abs(rep.rho_inf.value) <= 0.05);
  // continuation: |psi| ~ |xi| at 0 (arctan part), Re psi ~ xi^2
  CHECK(rep.beta0.value == doctest::Approx(1.0).epsilon(0.05));
  CHECK(rep.delta0.value == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("symbol subjects carry only the symbol indices") {
  IndexReport rep = estimate_indices(symmetric_stable_symbol(1.5, 1));
  CHECK(!rep.has_subordinator_indices);
  for (const IndexEstimate* e : {&rep.beta0, &rep.beta_inf, &rep.delta0, &rep.delta_inf})
    CHECK(e->value == doctest::Approx(1.5).epsilon(0.02));
}

TEST_CASE("liminf proxy") {
  BernsteinFunction root = stable_bernstein(0.5);
  LiminfCheck up = liminf_positive(root, 0.4, Regime::to_infinity);
  CHECK(up.positive);
  CHECK(up.proxy >= std::pow(10.0, 0.3) * (1.0 - 1e-9));

  CHECK(!liminf_positive(root, 0.6, Regime::to_infinity).positive);

  BernsteinFunction gamma = gamma_bernstein(1.0, 1.0);
  CHECK(!liminf_positive(gamma, 0.1, Regime::to_infinity).positive);

  BernsteinFunction drift = drift_bernstein(1.0);
  LiminfCheck flat = liminf_positive(drift, 1.0, Regime::to_infinity);
  CHECK(flat.positive);
  CHECK(flat.proxy == doctest::Approx(1.0));
}

TEST_CASE("hypothesis reports") {
  {  // stable: no finite full moment, but tail and limsup conditions hold
    HypothesisReport rep = check_hypotheses(stable_bernstein(0.5), 1.0, 0.3, 0.4);
    CHECK(rep.h1);
    CHECK(rep.h2);
    CHECK(!rep.h3);
    CHECK(rep.h4);
    CHECK(rep.witness_rho == doctest::Approx(0.4));
  }
  {  // stable with kappa2 at the index: the tail moment diverges
    HypothesisReport rep = check_hypotheses(stable_bernstein(0.5), 1.0, 0.5);
    CHECK(!rep.h2);
    CHECK(!rep.h4);
  }
  {  // gamma
    HypothesisReport rep = check_hypotheses(gamma_bernstein(1.0, 1.0), 1.0, 0.5, {}, 0.9);
    CHECK(rep.h2);
    CHECK(rep.h3);
    CHECK(rep.h4);
    CHECK(rep.witness_sigma == doctest::Approx(0.9));
  }
  {  // pure drift: empty measure makes the moment conditions trivial
    HypothesisReport rep = check_hypotheses(drift_bernstein(1.0), 1.0, 0.7, 1.0);
    CHECK(rep.h1);
    CHECK(rep.h2);
    CHECK(rep.h3);
  }
  CHECK_THROWS_AS(check_hypotheses(drift_bernstein(1.0), -1.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_hypotheses(drift_bernstein(1.0), 1.0, 1.5),
                  std::invalid_argument);
}

TEST_CASE("exact powers regress exactly for any scale and index") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    const double alpha = 0.05 + 0.95 * unif(rng);
    const double c = 0.2 + 3.0 * unif(rng);
    IndexReport rep = estimate_indices(stable_bernstein(std::min(alpha, 0.99), c));
    const double a = std::min(alpha, 0.99);
    CHECK(rep.sigma0.value == doctest::Approx(a).epsilon(1e-6));
    CHECK(rep.rho_inf.value == doctest::Approx(a).epsilon(1e-6));
  }
}

TEST_CASE("limsup proxy at zero") {
  // phi ~ u at 0: u^{-0.9} ratio stays bounded, u^{-1.1} ratio blows up
  BernsteinFunction gamma = gamma_bernstein(1.0, 1.0);
  CHECK(limsup_finite_at_zero(gamma, 0.9).finite);
  CHECK(!limsup_finite_at_zero(gamma, 1.1).finite);
}
