#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/special.hpp"

using namespace levym;

TEST_CASE("gamma recurrence") {
  for (int i = 0; i <= 100; ++i) {
    const double x = 0.1 + (50.0 - 0.1) * i / 100.0;
    CHECK(std::tgamma(x + 1.0) / (x * std::tgamma(x)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fractional-kernel constants at their reference points") {
  CHECK(riesz_c(1.0, 1) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK(cauchy_kernel_c(1) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  // c'_{1,2} = 2 pi Gamma(1/2)/Gamma(1/2)
  CHECK(riesz_c_prime(1.0, 2) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(riesz_c(2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(riesz_c_prime(1.0, 1), std::invalid_argument);
}

TEST_CASE("sphere surface areas") {
  CHECK(sphere_surface(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sphere_surface(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_surface(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
}

TEST_CASE("constants stay positive on their domains") {
  for (double kappa : {0.1, 0.5, 1.0, 1.5, 1.9}) {
    for (int d : {1, 2, 3}) {
      CHECK(riesz_c(kappa, d) > 0.0);
      if (kappa < d) CHECK(riesz_c_prime(kappa, d) > 0.0);
    }
  }
}
