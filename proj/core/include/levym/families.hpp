#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "levym/bernstein.hpp"
#include "levym/symbol.hpp"
#include "levym/triplet.hpp"

namespace levym {

/// Named parametric family plus parameters, as spelled on the command line
/// ("stable-subordinator:0.5", "gamma:1,1") or in a key=value config block.
struct FamilySpec {
  std::string family;
  std::map<std::string, double> params;
  int d = 1;

  double get(const std::string& key, double fallback) const;
  double require(const std::string& key) const;  // throws naming the field
};

/// "name:p1,p2,..." with positional parameters in the family's canonical
/// order, or "name" alone (defaults apply).
FamilySpec parse_family_spec(const std::string& text);

/// key=value lines; '#' starts a comment. Recognised keys: family, dimension,
/// and the family's parameter names.
FamilySpec parse_family_config(std::istream& in);

// --- measures ---------------------------------------------------------------

/// intensity c (alpha/Gamma(1-alpha)) x^{-1-alpha} on (0,inf); phi(u) = c u^alpha.
LevyMeasure stable_subordinator_measure(double alpha, double c = 1.0);
/// intensity alpha x^{-1} e^{-beta x} on (0,inf).
LevyMeasure gamma_measure(double alpha, double beta);
/// single positive atom.
LevyMeasure atom_measure(double y, double mass);
/// intensity c x^{-1-alpha} on (0,cut).
LevyMeasure truncated_stable_measure(double c, double alpha, double cut = 1.0);
/// rotation-invariant measure with symbol |xi|^alpha in R^d.
LevyMeasure symmetric_stable_measure(double alpha, int d);

// --- subordinators ----------------------------------------------------------

BernsteinFunction stable_bernstein(double alpha, double c = 1.0);
BernsteinFunction gamma_bernstein(double alpha, double beta);
BernsteinFunction drift_bernstein(double b);
BernsteinFunction poisson_bernstein(double eta, double y);

// --- registry ---------------------------------------------------------------

bool is_subordinator_family(const std::string& family);
BernsteinFunction make_bernstein(const FamilySpec& spec);
LevyTriplet make_triplet(const FamilySpec& spec);
CharacteristicExponent make_symbol(const FamilySpec& spec);

}  // namespace levym
