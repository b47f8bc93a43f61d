#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "levym/families.hpp"

using namespace levym;

TEST_CASE("spec strings") {
  FamilySpec s = parse_family_spec("stable:0.5");
  CHECK(s.family == "stable");
  CHECK(s.require("alpha") == 0.5);

  FamilySpec g = parse_family_spec("gamma:1,2");
  CHECK(g.require("alpha") == 1.0);
  CHECK(g.require("beta") == 2.0);

  CHECK_THROWS_AS(parse_family_spec("nosuch:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gamma:1,2,3"), std::invalid_argument);
}

TEST_CASE("missing parameters name the field") {
  FamilySpec s;
  s.family = "gamma";
  s.params["alpha"] = 1.0;
  try {
    make_bernstein(s);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("beta") != std::string::npos);
  }
}

TEST_CASE("key=value config blocks") {
  std::istringstream in(
      "# subordinator under test\n"
      "family = gamma\n"
      "alpha = 2.0\n"
      "beta = 0.5   # rate\n"
      "dimension = 1\n");
  FamilySpec spec = parse_family_config(in);
  CHECK(spec.family == "gamma");
  CHECK(spec.require("alpha") == 2.0);
  CHECK(spec.require("beta") == 0.5);
  BernsteinFunction phi = make_bernstein(spec);
  CHECK(phi(1.0) == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-12));

  std::istringstream bad("alpha = 1\n");
  CHECK_THROWS_AS(parse_family_config(bad), std::invalid_argument);
}

TEST_CASE("registry covers the built-in families") {
  CHECK(is_subordinator_family("stable-subordinator"));
  CHECK(is_subordinator_family("poisson"));
  CHECK(!is_subordinator_family("brownian"));

  FamilySpec b;
  b.family = "brownian";
  b.d = 2;
  CHECK(make_triplet(b).dim() == 2);
  CHECK(make_symbol(b)(2.0).real() == doctest::Approx(2.0));

  FamilySpec ss;
  ss.family = "symmetric-stable";
  ss.params["alpha"] = 1.5;
  ss.d = 1;
  CHECK(make_symbol(ss)(2.0).real() == doctest::Approx(std::pow(2.0, 1.5)));
  CHECK(make_triplet(ss).nu.symmetry() == MeasureSymmetry::symmetric);

  // phi(u) = c u^alpha normalisation of the stable measure
  BernsteinFunction phi = stable_bernstein(0.5, 2.0);
  CHECK(phi.value_quadrature(3.0) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-8));
}
