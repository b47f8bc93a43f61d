#include <doctest.h>

#include <cmath>

#include "levym/series.hpp"

using namespace levym;

TEST_CASE("convergent positive series") {
  auto r = sum_series([](long n) { return 1.0 / std::tgamma(n + 1.0); },
                      SeriesMode::all_positive);
  CHECK(!r.divergent);
  CHECK(r.value == doctest::Approx(M_E - 1.0).epsilon(1e-12));

  auto r2 = sum_series([](long n) { return std::pow(2.0, n) / std::tgamma(n + 1.0); },
                       SeriesMode::all_positive);
  CHECK(r2.value == doctest::Approx(M_E * M_E - 1.0).epsilon(1e-12));
  CHECK(r2.tail_bound < 1e-10 * r2.value);
}

TEST_CASE("super-geometric growth is flagged divergent") {
  // n^{n/2} 0.1^n grows eventually despite a long initial decay
  auto r = sum_series([](long n) { return std::pow(n, 0.5 * n) * std::pow(0.1, n); },
                      SeriesMode::all_positive);
  CHECK(r.divergent);
  CHECK(r.value == std::numeric_limits<double>::infinity());
  CHECK(!r.certificate.empty());
}

TEST_CASE("budget exhaustion is reported, not misclassified") {
  SeriesOptions opts;
  opts.max_terms = 50;
  auto r = sum_series([](long n) { return 1.0 / (double(n) * n); },
                      SeriesMode::all_positive, opts);
  CHECK(r.undecided);
}
