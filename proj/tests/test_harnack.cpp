#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/bounds.hpp"
#include "levym/families.hpp"
#include "levym/harnack.hpp"
#include "levym/slope.hpp"

using namespace levym;

TEST_CASE("degenerate log profile passes the constant through") {
  HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 0.0, 0.0, 5.0);
  for (double t : {0.01, 1.0, 100.0}) {
    SubordinateExponent se =
        subordinate_log_harnack(prof, gamma_bernstein(1.0, 1.0), t);
    CHECK(se.value == doctest::Approx(5.0));
    REQUIRE(se.exact_value.has_value());
    CHECK(*se.exact_value == doctest::Approx(5.0));
  }
}

TEST_CASE("log composition assembles the documented pieces") {
  BernsteinFunction phi = stable_bernstein(0.8);
  HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 1.0);
  SubordinateExponent se = subordinate_log_harnack(prof, phi, 1.0, LogHarnackCase::a);
  CHECK(se.case_used == 'a');

  GrowthWitness w = GrowthWitness::lower_from_grid(phi, se.hypotheses.witness_rho);
  const double neg = bound_sub_neg_moment(1.0, w, 1.0);
  const double pos = bound_abs_moment_small_time(subordinator_triplet(phi), 0.5, 1.0);
  CHECK(se.value == doctest::Approx(neg + pos + 1.0).epsilon(1e-9));

  REQUIRE(se.exact_value.has_value());
  CHECK(*se.exact_value <= se.value);
  CHECK(!se.ledger.empty());
}

TEST_CASE("auto selection prefers the slow-growth case") {
  // stable alpha = 0.8, kappa2 = 0.5 < 0.9 sigma0: h4 holds, case c wins
  SubordinateExponent se = subordinate_log_harnack(
      HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 0.0), stable_bernstein(0.8), 1.0);
  CHECK(se.case_used == 'c');
  CHECK(se.hypotheses.h4);
}

TEST_CASE("failed hypotheses are named") {
  // kappa2 at the stability index: the tail moment diverges
  HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 0.0);
  CHECK_THROWS_WITH_AS(
      subordinate_log_harnack(prof, stable_bernstein(0.5), 1.0, LogHarnackCase::a),
      doctest::Contains("h2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      subordinate_log_harnack(prof, stable_bernstein(0.5), 1.0, LogHarnackCase::b),
      doctest::Contains("h3"), std::runtime_error);
}

TEST_CASE("gamma large-time growth follows kappa2/sigma") {
  // C1 = 0: only the large-time factor matters; it grows like t^{kappa2/sigma}
  HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 0.0, 1.0, 0.0);
  BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
  auto psi_val = [&](double t) {
    return subordinate_log_harnack(prof, phi, t, LogHarnackCase::c, {}, 0.9).value;
  };
  SlopeEstimate se = loglog_slope_window(psi_val, 10.0, 1e3, 16);
  CHECK(se.slope == doctest::Approx(0.5 / 0.9).epsilon(0.1));
}

TEST_CASE("power composition") {
  HarnackProfile trivial = HarnackProfile::power_profile(1.0, 0.5, 0.0, 0.0, 2.0, 2.0);
  SubordinateExponent se =
      subordinate_power_harnack(trivial, stable_bernstein(0.8), 2.0, 1.0);
  CHECK(se.value == doctest::Approx(2.0));

  // exp-neg part alone works on any stable family with enough growth
  HarnackProfile neg_only = HarnackProfile::power_profile(1.0, 0.5, 1.0, 0.0, 0.0, 2.0);
  SubordinateExponent se2 =
      subordinate_power_harnack(neg_only, stable_bernstein(0.8), 2.0, 1.0);
  CHECK(std::isfinite(se2.value));
  CHECK(se2.value > 0.0);

  // small-t growth of log Phi stays below kappa1/(rho - (1-rho) kappa1)
  const double rho = 0.9 * 0.8;
  const double target = 1.0 / (rho - (1.0 - rho) * 1.0);
  auto phi_val = [&](double inv_t) {
    return subordinate_power_harnack(neg_only, stable_bernstein(0.8), 2.0, 1.0 / inv_t)
        .value;
  };
  SlopeEstimate slope = loglog_slope_window(phi_val, 1e2, 1e4, 12);
  CHECK(slope.slope <= target + 0.05);

  // heavy tails reject the exp-abs part
  HarnackProfile with_pos = HarnackProfile::power_profile(1.0, 0.5, 1.0, 1.0, 0.0, 2.0);
  CHECK_THROWS_WITH_AS(
      subordinate_power_harnack(with_pos, stable_bernstein(0.8), 2.0, 1.0),
      doctest::Contains("integrability"), std::runtime_error);

  // logarithmic growth leaves no admissible rho
  CHECK_THROWS_WITH_AS(
      subordinate_power_harnack(neg_only, gamma_bernstein(1.0, 1.0), 2.0, 1.0),
      doctest::Contains("rho"), std::runtime_error);
}

TEST_CASE("sde profile: closed forms") {
  // gamma = 1, K = 0: I(t) = 1/t
  for (double t : {0.25, 1.0, 4.0}) {
    SdeProfileResult res = sde_harnack_profile([](double) { return 1.0; },
                                               [](double) { return 0.0; }, 0.5, 1.0, 0.5,
                                               2.0, t);
    CHECK(res.I == doctest::Approx(1.0 / t).epsilon(1e-9));
    CHECK(res.log_exponent == doctest::Approx(0.125 / t).epsilon(1e-9));
    CHECK(res.power_exponent == doctest::Approx(0.25 / t).epsilon(1e-9));
  }
}

TEST_CASE("sde profile: capped-power drift constant") {
  // gamma = 1, K_s = s^theta and 1 with theta = -1/2
  auto K = [](double s) { return std::min(std::pow(s, -0.5), 1.0); };
  SdeProfileResult res =
      sde_harnack_profile([](double) { return 1.0; }, K, 1.0, 1.0, 0.5, 2.0, 1.0);
  CHECK(res.small_time_ok);
  CHECK(res.large_time_ok);
  CHECK(std::isfinite(res.fitted_C));
  CHECK(res.fitted_C > 0.0);
  CHECK(res.log_profile.C1 == doctest::Approx(res.fitted_C));
}

TEST_CASE("sde profile: singular dispersion with logarithmic drift growth") {
  auto gamma = [](double s) { return std::pow(s, -0.25); };
  auto K = [](double s) { return std::max(1.0, std::log(s)); };
  SdeProfileResult res = sde_harnack_profile(gamma, K, 1.0, 1.5, 1.0, 2.0, 1.0);
  CHECK(res.small_time_ok);
  CHECK(std::isfinite(res.I));

  // kappa1 far below 1 - 2 theta is rejected by the small-time proxy
  CHECK_THROWS_WITH_AS(sde_harnack_profile(gamma, K, 1.0, 1.0, 1.0, 2.0, 1.0),
                       doctest::Contains("small-time"), std::runtime_error);
}
