#include "levym/families.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "levym/special.hpp"

namespace levym {

double FamilySpec::get(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double FamilySpec::require(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("family '" + family + "': missing parameter '" + key + "'");
  return it->second;
}

namespace {

const std::vector<std::string>& positional_params(const std::string& family) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"stable-subordinator", {"alpha", "c"}},
      {"stable", {"alpha", "c"}},
      {"gamma", {"alpha", "beta"}},
      {"drift", {"b"}},
      {"poisson", {"eta", "y"}},
      {"truncated-stable", {"alpha", "c", "cut"}},
      {"brownian", {"scale"}},
      {"symmetric-stable", {"alpha"}},
  };
  auto it = table.find(family);
  if (it == table.end()) throw std::invalid_argument("unknown family '" + family + "'");
  return it->second;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  const auto& names = positional_params(spec.family);
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string piece;
    size_t i = 0;
    while (std::getline(ss, piece, ',')) {
      if (i >= names.size())
        throw std::invalid_argument("family '" + spec.family + "': too many parameters");
      spec.params[names[i++]] = std::stod(piece);
    }
  }
  return spec;
}

FamilySpec parse_family_config(std::istream& in) {
  FamilySpec spec;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    if (key == "family") {
      spec.family = val;
    } else if (key == "dimension" || key == "d") {
      spec.d = std::stoi(val);
    } else {
      spec.params[key] = std::stod(val);
    }
  }
  if (spec.family.empty())
    throw std::invalid_argument("family config: missing 'family' key");
  positional_params(spec.family);  // validates the name
  return spec;
}

// --- measures ---------------------------------------------------------------

LevyMeasure stable_subordinator_measure(double alpha, double c) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("stable subordinator: alpha must be in (0,1)");
  if (!(c > 0.0)) throw std::invalid_argument("stable subordinator: c must be > 0");
  const double k = c * alpha / std::tgamma(1.0 - alpha);
  RadialComponent comp;
  comp.intensity = [k, alpha](double x) { return k * std::pow(x, -1.0 - alpha); };
  comp.sing_exponent = -1.0 - alpha;
  comp.tail_mass_closed = [k, alpha](double r) { return k / alpha * std::pow(r, -alpha); };
  return LevyMeasure(1, MeasureSymmetry::one_sided_positive, {comp}, {},
                     "stable-subordinator");
}

LevyMeasure gamma_measure(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0))
    throw std::invalid_argument("gamma measure: alpha, beta must be > 0");
  RadialComponent comp;
  comp.intensity = [alpha, beta](double x) { return alpha / x * std::exp(-beta * x); };
  comp.sing_exponent = -1.0;
  return LevyMeasure(1, MeasureSymmetry::one_sided_positive, {comp}, {}, "gamma");
}

LevyMeasure atom_measure(double y, double mass) {
  if (!(y > 0.0)) throw std::invalid_argument("atom measure: y must be > 0");
  return LevyMeasure(1, MeasureSymmetry::one_sided_positive, {}, {Atom{{y}, mass}},
                     "atom");
}

LevyMeasure truncated_stable_measure(double c, double alpha, double cut) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("truncated stable: alpha must be in (0,2)");
  RadialComponent comp;
  comp.intensity = [c, alpha](double x) { return c * std::pow(x, -1.0 - alpha); };
  comp.sing_exponent = -1.0 - alpha;
  comp.support_hi = cut;
  return LevyMeasure(1, MeasureSymmetry::one_sided_positive, {comp}, {},
                     "truncated-stable");
}

LevyMeasure symmetric_stable_measure(double alpha, int d) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("symmetric stable: alpha must be in (0,2)");
  const double k = sphere_surface(d) * riesz_c(alpha, d);
  RadialComponent comp;
  comp.intensity = [k, alpha](double r) { return k * std::pow(r, -1.0 - alpha); };
  comp.sing_exponent = -1.0 - alpha;
  comp.tail_mass_closed = [k, alpha](double r) { return k / alpha * std::pow(r, -alpha); };
  return LevyMeasure(d, MeasureSymmetry::symmetric, {comp}, {}, "symmetric-stable");
}

// --- subordinators ----------------------------------------------------------

BernsteinFunction stable_bernstein(double alpha, double c) {
  return BernsteinFunction(0.0, stable_subordinator_measure(alpha, c),
                           {StableTerm{c, alpha}}, "stable:" + std::to_string(alpha));
}

BernsteinFunction gamma_bernstein(double alpha, double beta) {
  return BernsteinFunction(0.0, gamma_measure(alpha, beta), {GammaTerm{alpha, beta}},
                           "gamma:" + std::to_string(alpha) + "," + std::to_string(beta));
}

BernsteinFunction drift_bernstein(double b) {
  return BernsteinFunction(b, LevyMeasure::zero(1), {}, "drift:" + std::to_string(b));
}

BernsteinFunction poisson_bernstein(double eta, double y) {
  return BernsteinFunction(0.0, atom_measure(y, eta),
                           {PoissonTerm{eta, {{y, 1.0}}}},
                           "poisson:" + std::to_string(eta) + "," + std::to_string(y));
}

// --- registry ---------------------------------------------------------------

bool is_subordinator_family(const std::string& family) {
  return family == "stable-subordinator" || family == "stable" || family == "gamma" ||
         family == "drift" || family == "poisson" || family == "truncated-stable";
}

BernsteinFunction make_bernstein(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "stable-subordinator" || f == "stable")
    return stable_bernstein(spec.require("alpha"), spec.get("c", 1.0));
  if (f == "gamma") return gamma_bernstein(spec.require("alpha"), spec.require("beta"));
  if (f == "drift") return drift_bernstein(spec.require("b"));
  if (f == "poisson") return poisson_bernstein(spec.require("eta"), spec.get("y", 1.0));
  if (f == "truncated-stable") {
    LevyMeasure nu = truncated_stable_measure(spec.get("c", 1.0), spec.require("alpha"),
                                              spec.get("cut", 1.0));
    return BernsteinFunction(0.0, nu, {}, "truncated-stable");
  }
  throw std::invalid_argument("family '" + f + "' is not a subordinator family");
}

LevyTriplet make_triplet(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (is_subordinator_family(f)) return subordinator_triplet(make_bernstein(spec));
  if (f == "brownian") {
    const int d = spec.d;
    return LevyTriplet(std::vector<double>(d, 0.0),
                       SymMatrix::identity(d, spec.get("scale", 1.0)), LevyMeasure::zero(d));
  }
  if (f == "symmetric-stable") {
    const int d = spec.d;
    return LevyTriplet(std::vector<double>(d, 0.0), SymMatrix(d),
                       symmetric_stable_measure(spec.require("alpha"), d));
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

CharacteristicExponent make_symbol(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "brownian") return brownian_symbol(spec.d, spec.get("scale", 1.0));
  if (f == "symmetric-stable") return symmetric_stable_symbol(spec.require("alpha"), spec.d);
  if (is_subordinator_family(f)) return symbol_from_bernstein(make_bernstein(spec));
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace levym
