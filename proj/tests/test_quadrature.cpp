#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/quadrature.hpp"

using namespace levym;

TEST_CASE("semi-infinite quadrature reproduces Gamma-type integrals") {
  auto r = integrate_semiinf([](double u) { return std::pow(u, -0.5) * std::exp(-u); },
                             -0.5);
  CHECK(r.ok());
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));

  auto g = integrate_semiinf([](double u) { return std::exp(-u * u); }, 0.0);
  CHECK(g.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-10));

  // substitution oracle: v = u^{1/2} turns this into 2 Gamma(1/2)
  auto s = integrate_semiinf(
      [](double u) { return std::pow(u, 0.25 - 1.0) * std::exp(-std::pow(u, 0.5)); },
      -0.75);
  CHECK(s.value == doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-9));
}

TEST_CASE("endpoint exponent at or below -1 is rejected") {
  SemiInfOptions opts;
  opts.check_divergence = true;
  auto r = integrate_semiinf([](double u) { return std::pow(u, -1.2) * std::exp(-u); },
                             -1.2, opts);
  CHECK(r.divergent());
  CHECK(r.certificate.find("exponent") != std::string::npos);

  CHECK_THROWS_AS(
      integrate_semiinf([](double u) { return std::pow(u, -1.2) * std::exp(-u); }, -1.2),
      std::invalid_argument);
}

TEST_CASE("divergent tails produce a lower-sum certificate") {
  SemiInfOptions opts;
  opts.check_divergence = true;
  auto r = integrate_semiinf([](double u) { return std::pow(u, -0.5); }, -0.5, opts);
  CHECK(r.divergent());
  CHECK(r.value == kInf);
  CHECK(r.certificate.find("cap") != std::string::npos);

  // exponential blow-up certifies quickly as well
  auto e = integrate_semiinf([](double u) { return std::exp(0.5 * u) / (1.0 + u); }, 0.0,
                             opts);
  CHECK(e.divergent());
}

TEST_CASE("slowly decaying but integrable tails converge in check mode") {
  SemiInfOptions opts;
  opts.check_divergence = true;
  opts.support_lo = 1.0;
  opts.scale = 1.0;
  auto r = integrate_semiinf([](double u) { return std::pow(u, -1.05); }, 0.0, opts);
  CHECK(r.ok());
  CHECK(r.value == doctest::Approx(1.0 / 0.05).epsilon(1e-6));
}

TEST_CASE("error estimates are conservative on a library of closed forms") {
  struct Item {
    std::function<double(double)> f;
    double sing;
    double exact;
  };
  std::vector<Item> items;
  for (double a : {-0.5, -0.25, 0.0, 0.5, 1.0}) {
    items.push_back({[a](double u) { return std::pow(u, a) * std::exp(-u); }, a,
                     std::tgamma(a + 1.0)});
  }
  for (double s : {0.5, 1.0, 2.0, 3.0}) {
    items.push_back({[s](double u) { return std::exp(-s * u); }, 0.0, 1.0 / s});
  }
  for (double b : {1.5, 2.0, 3.0}) {
    items.push_back({[b](double u) { return 1.0 / std::pow(1.0 + u, b); }, 0.0,
                     1.0 / (b - 1.0)});
  }
  for (double c : {0.5, 1.0, 2.0}) {
    items.push_back({[c](double u) { return std::exp(-c * u * u); }, 0.0,
                     0.5 * std::sqrt(M_PI / c)});
  }
  for (double a : {-0.5, -0.25, 0.25}) {
    items.push_back({[a](double u) { return std::pow(u, a) * std::exp(-2.0 * u); }, a,
                     std::tgamma(a + 1.0) / std::pow(2.0, a + 1.0)});
  }
  items.push_back({[](double u) { return u * std::exp(-u); }, 1.0, 1.0});
  items.push_back({[](double u) { return u * u * std::exp(-u); }, 2.0, 2.0});
  items.push_back(
      {[](double u) { return std::pow(u, -0.5) / (1.0 + u * u); }, -0.5,
       M_PI / std::sqrt(2.0)});
  REQUIRE(items.size() >= 20);

  int conservative = 0;
  for (const Item& item : items) {
    auto r = integrate_semiinf(item.f, item.sing);
    const double true_err = std::abs(r.value - item.exact);
    if (true_err <= std::max(r.abs_error, 1e-13 * std::abs(item.exact))) ++conservative;
  }
  CHECK(conservative >= int(0.95 * items.size()));
}

TEST_CASE("oscillatory tails against the exponential-times-sine closed form") {
  // int_1^inf e^{-y} sin(xi y) dy = e^{-1} (sin xi + xi cos xi) / (1 + xi^2)
  for (double xi : {0.5, 5.0, 50.0, 500.0}) {
    auto r = integrate_oscillatory_tail([](double y) { return std::exp(-y); }, xi, true,
                                        1.0);
    const double exact =
        std::exp(-1.0) * (std::sin(xi) + xi * std::cos(xi)) / (1.0 + xi * xi);
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-7));
  }
}
