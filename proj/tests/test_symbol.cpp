#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/families.hpp"
#include "levym/symbol.hpp"

using namespace levym;

TEST_CASE("closed-form symbols") {
  CharacteristicExponent bm = brownian_symbol(2);
  CHECK(bm(2.0).real() == doctest::Approx(2.0));
  CHECK(bm(2.0).imag() == 0.0);
  std::vector<double> xi = {1.0, 1.0};
  CHECK(bm.evaluate(xi).real() == doctest::Approx(1.0));

  CharacteristicExponent ss = symmetric_stable_symbol(1.5, 1);
  CHECK(ss(4.0).real() == doctest::Approx(8.0));
  CHECK(ss(0.0) == std::complex<double>(0.0));
}

TEST_CASE("triplet quadrature reproduces the Bernstein continuation") {
  // the subordinator-as-triplet drift carries the small-jump mean, so the
  // compensated LK integral must equal phi(-i xi) exactly
  for (const BernsteinFunction& phi :
       {gamma_bernstein(1.0, 1.0), stable_bernstein(0.5)}) {
    LevyTriplet trip = subordinator_triplet(phi);
    CharacteristicExponent lk = symbol_from_triplet(trip);
    for (double xi : {0.5, 2.0, 20.0}) {
      const auto a = phi.continuation(xi);
      const auto b = lk(xi);
      CHECK(b.real() == doctest::Approx(a.real()).epsilon(1e-6));
      CHECK(b.imag() == doctest::Approx(a.imag()).epsilon(1e-6));
    }
  }
}

TEST_CASE("rotation-invariant stable measure integrates to the power symbol") {
  for (int d : {1, 2}) {
    const double alpha = d == 1 ? 0.7 : 1.2;
    LevyTriplet trip(std::vector<double>(d, 0.0), SymMatrix(d),
                     symmetric_stable_measure(alpha, d));
    CharacteristicExponent lk = symbol_from_triplet(trip);
    for (double r : {0.5, 1.0, 4.0}) {
      CHECK(lk(r).real() == doctest::Approx(std::pow(r, alpha)).epsilon(1e-4));
      CHECK(std::abs(lk(r).imag()) < 1e-8 * std::pow(r, alpha));
    }
  }
}

TEST_CASE("symbol invariants hold for the subordinator continuation") {
  CharacteristicExponent psi = symbol_from_bernstein(gamma_bernstein(2.0, 1.0));
  CHECK(psi(0.0) == std::complex<double>(0.0));
  CHECK(!psi.radial());
  for (double r : {1e-3, 0.1, 1.0, 50.0}) {
    CHECK(psi(r).real() >= 0.0);
    std::vector<double> plus = {r}, minus = {-r};
    CHECK(psi.evaluate(minus) == std::conj(psi.evaluate(plus)));
  }
}

TEST_CASE("gaussian triplet symbol") {
  LevyTriplet trip({0.0}, SymMatrix::identity(1, 1.0), LevyMeasure::zero(1));
  CharacteristicExponent lk = symbol_from_triplet(trip);
  CHECK(lk(3.0).real() == doctest::Approx(4.5));
  CHECK(lk(3.0).imag() == 0.0);
  CHECK(lk.radial());
}

TEST_CASE("symmetric matrices validate PSD") {
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 2.0, 1.0}), std::invalid_argument);  // eig -1
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 0.5, -0.5, 1.0}), std::invalid_argument);  // asym
  SymMatrix ok(2, {2.0, 1.0, 1.0, 2.0});
  CHECK(ok.min_eigenvalue() == doctest::Approx(1.0).epsilon(1e-9));
}
