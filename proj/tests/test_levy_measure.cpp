#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/families.hpp"
#include "levym/levy_measure.hpp"
#include "levym/series.hpp"

using namespace levym;

TEST_CASE("tail mass") {
  CHECK(atom_measure(2.0, 3.0).tail_mass(1.0).value == doctest::Approx(3.0));

  // closed-form tail of the stable intensity: nu([r,inf)) = (c/alpha) r^{-alpha}
  LevyMeasure stable = stable_subordinator_measure(0.5, 1.0);
  const double k = 0.5 / std::tgamma(0.5);
  CHECK(stable.tail_mass(1.0).value == doctest::Approx(k / 0.5).epsilon(1e-10));

  CHECK(LevyMeasure::zero(1).tail_mass(1.0).value == doctest::Approx(0.0));
}

TEST_CASE("fractional moments") {
  LevyMeasure gamma = gamma_measure(1.0, 1.0);
  CHECK(gamma.frac_moment(1.0, NuRegion::full).value == doctest::Approx(1.0).epsilon(1e-9));

  LevyMeasure stable = stable_subordinator_measure(0.5, 1.0);
  const double k = 0.5 / std::tgamma(0.5);
  auto outer = stable.frac_moment(0.25, NuRegion::outer);
  CHECK(outer.ok());
  CHECK(outer.value == doctest::Approx(k * 4.0).epsilon(1e-8));  // int_1^inf x^{-1.25}

  // inner integral of order below alpha diverges at 0
  auto inner = stable.frac_moment(0.25, NuRegion::inner);
  CHECK(!inner.ok());
  CHECK(inner.value == kInf);

  CHECK(LevyMeasure::zero(1).frac_moment(0.3, NuRegion::full).value == doctest::Approx(0.0));
}

TEST_CASE("exponential moments and their certificates") {
  LevyMeasure atom = atom_measure(1.0, 2.0);
  CHECK(atom.exp_moment(std::log(2.0), 1.0, NuRegion::outer).value ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(atom.exp_moment_minus_one(std::log(2.0), 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-12));

  LevyMeasure gamma = gamma_measure(1.0, 1.0);
  // Frullani: int (e^{y/2}-1) y^{-1} e^{-y} dy = log 2
  CHECK(gamma.exp_moment_minus_one(0.5, 1.0).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-9));

  auto div = gamma.exp_moment(2.0, 1.0, NuRegion::outer);
  CHECK(div.divergent());
  CHECK(div.value == kInf);
  CHECK(!div.certificate.empty());
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(atom_measure(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LevyMeasure(1, MeasureSymmetry::one_sided_positive, {},
                              {Atom{{0.0}, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LevyMeasure(1, MeasureSymmetry::one_sided_positive, {},
                              {Atom{{1.0}, -2.0}}),
                  std::invalid_argument);

  // constant intensity has infinite mass at infinity
  RadialComponent flat;
  flat.intensity = [](double) { return 1.0; };
  flat.sing_exponent = 0.0;
  CHECK_THROWS_AS(LevyMeasure(1, MeasureSymmetry::one_sided_positive, {flat}, {}),
                  std::invalid_argument);

  // too singular at the origin
  RadialComponent hot;
  hot.intensity = [](double r) { return std::pow(r, -3.2) * std::exp(-r); };
  hot.sing_exponent = -3.2;
  CHECK_THROWS_AS(LevyMeasure(1, MeasureSymmetry::one_sided_positive, {hot}, {}),
                  std::invalid_argument);
}

TEST_CASE("small-jump mean and bounded variation") {
  LevyMeasure stable = stable_subordinator_measure(0.5, 1.0);
  auto mean = stable.small_jump_mean();
  REQUIRE(mean.has_value());
  const double k = 0.5 / std::tgamma(0.5);
  CHECK((*mean)[0] == doctest::Approx(k / 0.5).epsilon(1e-9));  // int_0^1 x^{-0.5} k dx

  // symmetric measures have zero mean but may still fail bounded variation
  LevyMeasure sym_ok = symmetric_stable_measure(0.7, 1);
  auto m2 = sym_ok.small_jump_mean();
  REQUIRE(m2.has_value());
  CHECK((*m2)[0] == doctest::Approx(0.0));

  LevyMeasure sym_bad = symmetric_stable_measure(1.5, 1);
  CHECK(!sym_bad.small_jump_mean().has_value());
}

TEST_CASE("component sums aggregate queries") {
  LevyMeasure sum = stable_subordinator_measure(0.5, 1.0) + atom_measure(2.0, 3.0);
  const double k = 0.5 / std::tgamma(0.5);
  CHECK(sum.tail_mass(1.0).value == doctest::Approx(k / 0.5 + 3.0).epsilon(1e-9));
  CHECK(sum.frac_moment(0.25, NuRegion::outer).value ==
        doctest::Approx(k * 4.0 + 3.0 * std::pow(2.0, 0.25)).epsilon(1e-8));
}

TEST_CASE("compensated exponential moment of a truncated heavy intensity") {
  LevyMeasure trunc = truncated_stable_measure(1.0, 0.5, 1.0);
  // e^{lambda y} alone is not nu-integrable (infinite activity); the
  // compensated version is, and the support truncation keeps it finite
  CHECK(!trunc.exp_moment(5.0, 1.0, NuRegion::inner).ok());
  auto q = trunc.exp_moment_minus_one(5.0, 1.0);
  CHECK(q.ok());
  // series oracle: int_0^1 (e^{5y}-1) y^{-1.5} dy = sum_{n>=1} 5^n/(n! (n-0.5))
  auto oracle = sum_series(
      [](long n) {
        return std::pow(5.0, n) / (std::tgamma(n + 1.0) * (n - 0.5));
      },
      SeriesMode::all_positive);
  CHECK(q.value == doctest::Approx(oracle.value).epsilon(1e-8));
}
