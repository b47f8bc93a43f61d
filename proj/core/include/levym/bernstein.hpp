#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "levym/levy_measure.hpp"

namespace levym {

/// Closed-form building blocks for Laplace exponents. `value` must accept any
/// z with Re z >= 0 (principal branches), so the same term serves both phi(u)
/// on (0,inf) and the continuation phi(-i xi).
struct StableTerm {
  double c = 1.0;     // phi(u) = c u^alpha
  double alpha = 0.5;
};
struct GammaTerm {
  double alpha = 1.0;  // phi(u) = alpha log(1 + u/beta)
  double beta = 1.0;
};
struct PoissonTerm {
  double eta = 1.0;                                  // phi(u) = eta (1 - L(u))
  std::vector<std::pair<double, double>> jumps;      // (y, weight), weights sum to 1
};
using ClosedFormTerm = std::variant<StableTerm, GammaTerm, PoissonTerm>;

/// Laplace exponent of a subordinator:
///   phi(u) = b u + integral over (0,inf) of (1 - e^{-u x}) nu(dx).
///
/// When closed-form terms are present they are used for evaluation; the
/// (b, nu) pair remains available for quadrature cross-checks and for every
/// measure-level query.
class BernsteinFunction {
 public:
  BernsteinFunction();  // phi = 0
  BernsteinFunction(double drift, LevyMeasure nu, std::vector<ClosedFormTerm> closed = {},
                    std::string name = {});

  double drift() const { return b_; }
  const LevyMeasure& measure() const { return nu_; }
  const std::string& name() const { return name_; }
  bool has_closed_form() const { return !terms_.empty() || nu_.is_zero(); }
  const std::vector<ClosedFormTerm>& closed_form_terms() const { return terms_; }

  /// phi(u); closed form when available, quadrature otherwise.
  double operator()(double u) const;
  /// phi(u) by direct quadrature of the representation (ignores closed forms).
  double value_quadrature(double u) const;
  /// phi'(u) = b + integral of x e^{-ux} nu(dx).
  double derivative(double u) const;

  /// phi(-i xi) for xi real; principal branch for closed forms, quadrature of
  /// b(-i xi) + integral of (1 - e^{i xi x}) nu(dx) otherwise.
  std::complex<double> continuation(double xi) const;

  BernsteinFunction operator+(const BernsteinFunction& other) const;

 private:
  double b_ = 0.0;
  LevyMeasure nu_;
  std::vector<ClosedFormTerm> terms_;
  std::string name_;
};

}  // namespace levym
