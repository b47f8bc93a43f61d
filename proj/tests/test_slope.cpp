#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/slope.hpp"

using namespace levym;

TEST_CASE("pure powers are recovered exactly") {
  for (Regime regime : {Regime::to_zero, Regime::to_infinity}) {
    SlopeEstimate se =
        loglog_slope([](double u) { return std::pow(u, 0.7); }, regime);
    CHECK(se.slope == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(se.residual < 1e-9);
  }
}

TEST_CASE("logarithmic growth flattens towards zero slope at infinity") {
  SlopeOptions opts;
  opts.decades = 20;  // a logarithm needs a long window to drop below 0.05
  SlopeEstimate se =
      loglog_slope([](double u) { return std::log1p(u); }, Regime::to_infinity, opts);
  CHECK(se.slope > 0.0);
  CHECK(se.slope <= 0.05);
}

TEST_CASE("log(1+u) looks linear at zero") {
  SlopeEstimate se =
      loglog_slope([](double u) { return std::log1p(u); }, Regime::to_zero);
  CHECK(se.slope == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("non-positive samples are a hard error") {
  // the near-zero grid hits u < 1 where this g is negative
  CHECK_THROWS_AS(loglog_slope([](double u) { return u - 1.0; }, Regime::to_zero),
                  std::domain_error);
}
