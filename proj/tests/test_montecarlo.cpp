#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "levym/moments.hpp"
#include "levym/montecarlo.hpp"

using namespace levym;

TEST_CASE("batches are reproducible and streams are independent") {
  SampleBatch a = sample_stable_subordinator(0.5, 1.0, 10000, 7);
  SampleBatch b = sample_stable_subordinator(0.5, 1.0, 10000, 7);
  CHECK(a.values == b.values);  // bitwise

  SampleBatch c = sample_stable_subordinator(0.5, 1.0, 10000, 8);
  CHECK(a.values != c.values);

  // block structure: a longer batch extends a shorter one
  SampleBatch d = sample_stable_subordinator(0.5, 1.0, 20000, 7);
  bool prefix = true;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    prefix = prefix && d.values[i] == a.values[i];
  CHECK(prefix);
}

TEST_CASE("stable sampler matches its Laplace transform") {
  for (double alpha : {0.3, 0.5, 0.9}) {
    SampleBatch batch = sample_stable_subordinator(alpha, 1.0, 200000, 11);
    EmpiricalMoment em =
        empirical_moment(batch, [](double x) { return std::exp(-x); });
    CHECK(std::abs(em.mean - std::exp(-1.0)) <= 3.0 * em.std_error);
  }
}

TEST_CASE("gamma and compound Poisson samplers match closed forms") {
  SampleBatch g = sample_gamma_process(2.0, 3.0, 1.5, 200000, 5);
  EmpiricalMoment mean = empirical_moment(g, [](double x) { return x; });
  CHECK(std::abs(mean.mean - 2.0 * 1.5 / 3.0) <= 3.0 * mean.std_error);
  EmpiricalMoment frac = empirical_moment(g, [](double x) { return std::sqrt(x); });
  CHECK(std::abs(frac.mean - gamma_subordinator_moment(2.0, 3.0, 0.5, 1.5)) <=
        3.0 * frac.std_error);

  SampleBatch p = sample_compound_poisson_atom(2.0, 1.5, 2.0, 200000, 5);
  EmpiricalMoment pm = empirical_moment(p, [](double x) { return x; });
  CHECK(std::abs(pm.mean - 2.0 * 2.0 * 1.5) <= 3.0 * pm.std_error);
}

TEST_CASE("subordinate Brownian motion hits the stable moment scale") {
  SampleBatch x = sample_subordinate_brownian(1.5, 1, 1.0, 200000, 99);
  // symmetric: the mean vanishes
  EmpiricalMoment m = empirical_moment(x, [](double v) { return v; });
  CHECK(std::abs(m.mean) <= 4.0 * m.std_error);
  // 3d batches store radii
  SampleBatch r3 = sample_subordinate_brownian(1.2, 3, 1.0, 1000, 1);
  for (double v : r3.values) CHECK(v >= 0.0);
}

TEST_CASE("empirical moments flag non-finite functionals") {
  SampleBatch batch;
  batch.values = {1.0, 0.0, 2.0};
  EmpiricalMoment em = empirical_moment(batch, [](double x) { return 1.0 / x; });
  CHECK(em.diverged);
  CHECK(em.mean == std::numeric_limits<double>::infinity());

  SampleBatch flat;
  flat.values = std::vector<double>(64, 3.25);
  EmpiricalMoment c = empirical_moment(flat, [](double x) { return x; });
  CHECK(c.mean == doctest::Approx(3.25));
  CHECK(c.std_error == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(sample_stable_subordinator(1.2, 1.0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_gamma_process(-1.0, 1.0, 1.0, 10, 1), std::invalid_argument);
  SampleBatch tiny;
  tiny.values = {1.0};
  CHECK_THROWS_AS(empirical_moment(tiny, [](double x) { return x; }),
                  std::invalid_argument);
}
