#include <doctest.h>

#include <cmath>

#include "levym/families.hpp"
#include "levym/minimize.hpp"

using namespace levym;

TEST_CASE("interior and boundary minima") {
  auto r = minimize_1d([](double x) { return (x - 0.6) * (x - 0.6); }, 0.25, 1.0);
  CHECK(r.argmin == doctest::Approx(0.6).epsilon(1e-8));
  CHECK(r.min == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  auto b = minimize_1d([](double x) { return x; }, 0.25, 1.0);
  CHECK(b.argmin == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(b.min == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("matches a dense grid scan on the theta objective") {
  // the objective of the bounded-variation moment bound for the Gamma family
  LevyMeasure nu = gamma_measure(1.0, 1.0);
  const double kappa = 0.5, t = 3.0;
  auto objective = [&](double theta) {
    const double m = nu.frac_moment(theta, NuRegion::full).value;
    return std::pow(m * t, kappa / theta);
  };
  MinimizeResult r = minimize_1d(objective, kappa, 1.0);

  double brute = kInf;
  for (int i = 0; i <= 4096; ++i) {
    const double theta = kappa + (1.0 - kappa) * i / 4096.0;
    brute = std::min(brute, objective(theta));
  }
  CHECK(r.min <= brute * (1.0 + 1e-6));
  CHECK(r.min >= brute * (1.0 - 1e-6));
}
