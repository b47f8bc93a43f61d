#include "levym/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "levym/minimize.hpp"
#include "levym/special.hpp"

namespace levym {

namespace {
constexpr int kWitnessPoints = 48;
}

GrowthWitness GrowthWitness::lower_from_grid(const BernsteinFunction& phi, double rho) {
  GrowthWitness w;
  w.C2 = 1e3;
  w.exponent = rho;
  w.source = "grid-min of phi(u) u^{-rho} on [1e3,1e6]";
  double m = kInf;
  for (int i = 0; i < kWitnessPoints; ++i) {
    const double u = 1e3 * std::pow(1e3, double(i) / (kWitnessPoints - 1));
    m = std::min(m, phi(u) * std::pow(u, -rho));
  }
  w.C1 = m;
  return w;
}

GrowthWitness GrowthWitness::lower_from_symbol(const CharacteristicExponent& psi,
                                               double delta) {
  GrowthWitness w;
  w.C2 = 1e3;
  w.exponent = delta;
  w.source = "grid-min of Re psi(xi) |xi|^{-delta} on [1e3,1e6]";
  double m = kInf;
  for (int i = 0; i < kWitnessPoints; ++i) {
    const double r = 1e3 * std::pow(1e3, double(i) / (kWitnessPoints - 1));
    m = std::min(m, psi(r).real() * std::pow(r, -delta));
  }
  w.C1 = m;
  return w;
}

GrowthWitness GrowthWitness::global(double C1, double exponent) {
  GrowthWitness w;
  w.C1 = C1;
  w.C2 = 0.0;
  w.exponent = exponent;
  w.source = "analytic";
  return w;
}

bool GrowthWitness::validate_lower(const std::function<double(double)>& g, double hi) const {
  const double lo = std::max(C2, 1e-6);
  for (int i = 0; i < kWitnessPoints; ++i) {
    const double u = lo * std::pow(hi / lo, double(i) / (kWitnessPoints - 1));
    if (g(u) < C1 * std::pow(u, exponent) * (1.0 - 1e-12)) return false;
  }
  return true;
}

double symbol_growth_constant(const CharacteristicExponent& psi, double beta,
                              bool global_in_xi) {
  const double lo = 1e-8;
  const double hi = global_in_xi ? 1e8 : 1.0;
  const int n = global_in_xi ? 2 * kWitnessPoints : kWitnessPoints;
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = lo * std::pow(hi / lo, double(i) / (n - 1));
    sup = std::max(sup, std::abs(psi(r)) * std::pow(r, -beta));
  }
  return sup;
}

// ---- absolute moments ----------------------------------------------------------

double bound_abs_moment_small_time(const LevyTriplet& triplet, double kappa, double t) {
  if (!triplet.gaussian_zero())
    throw std::invalid_argument("bound_abs_moment_small_time: requires Q = 0");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("bound_abs_moment_small_time: kappa must be in (0,1]");
  const int d = triplet.dim();
  const LevyMeasure& nu = triplet.nu;

  QuadratureResult outer = nu.frac_moment(kappa, NuRegion::outer);
  if (!outer.ok()) return kInf;
  QuadratureResult inner2 = nu.radial_integral([](double r) { return r * r; }, 2.0, 0.0, 1.0);
  QuadratureResult mass = nu.tail_mass(1.0);

  const double term1 = std::pow(triplet.drift_norm(), kappa) * std::pow(t, kappa);
  const double term2 = outer.value * t;
  const double base = 0.5 * d * kappa * (3.0 - kappa) * inner2.value;
  const double term3 = 2.0 * std::pow(base, 0.5 * kappa) *
                       std::pow(1.0 + mass.value * t, 1.0 - 0.5 * kappa) *
                       std::pow(t, 0.5 * kappa);
  return term1 + term2 + term3;
}

double bound_abs_moment_bv(const LevyTriplet& triplet, double kappa, double t,
                           double* theta_star) {
  if (!triplet.gaussian_zero())
    throw std::invalid_argument("bound_abs_moment_bv: requires Q = 0");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("bound_abs_moment_bv: kappa must be in (0,1]");
  auto ell_hat = triplet.compensated_drift_norm();
  if (!ell_hat) return kInf;  // not of bounded variation

  auto objective = [&](double theta) {
    QuadratureResult m = triplet.nu.frac_moment(theta, NuRegion::full);
    if (!m.ok()) return kInf;
    const double inner = std::pow(*ell_hat, theta) * std::pow(t, theta) + m.value * t;
    return std::pow(inner, kappa / theta);
  };
  if (kappa == 1.0) {
    if (theta_star) *theta_star = 1.0;
    return objective(1.0);
  }
  MinimizeResult res = minimize_1d(objective, kappa, 1.0);
  if (theta_star) *theta_star = res.argmin;
  return res.min;
}

double bound_abs_moment_symbol(int d, double kappa, double beta, double c_beta, double t,
                               bool all_t) {
  if (!(kappa > 0.0 && kappa < beta))
    throw std::invalid_argument("bound_abs_moment_symbol: kappa must be in (0,beta)");
  if (!all_t && t < 1.0)
    throw std::invalid_argument(
        "bound_abs_moment_symbol: t < 1 needs a growth constant valid on all frequencies");
  return riesz_c(kappa, d) * sphere_surface(d) * std::pow(t, kappa / beta) *
         (c_beta / (beta - kappa) + 2.0 / kappa);
}

double bound_sub_pos_moment_symbol(const BernsteinFunction& phi, double kappa, double sigma,
                                   double t, bool global_in_u) {
  if (!(kappa > 0.0 && kappa < sigma))
    throw std::invalid_argument("bound_sub_pos_moment_symbol: kappa must be in (0,sigma)");
  // |phi(-i xi)| <= 2e/(e-1) phi(|xi|) transfers the Laplace-side growth
  // constant to the symbol side
  const double lo = 1e-8, hi = global_in_u ? 1e8 : 1.0;
  const int n = kWitnessPoints;
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = lo * std::pow(hi / lo, double(i) / (n - 1));
    sup = std::max(sup, phi(u) * std::pow(u, -sigma));
  }
  const double c_beta = 2.0 * M_E / (M_E - 1.0) * sup;
  const double teff = global_in_u ? t : std::max(t, 1.0);
  return bound_abs_moment_symbol(1, kappa, sigma, c_beta, teff, global_in_u);
}

// ---- negative moments ----------------------------------------------------------

double bound_neg_moment_symbol(int d, double kappa, const GrowthWitness& witness,
                               double t) {
  if (!(kappa > 0.0 && kappa < d))
    throw std::invalid_argument("bound_neg_moment_symbol: kappa must be in (0,d)");
  if (!(witness.C1 > 0.0))
    throw std::invalid_argument("bound_neg_moment_symbol: witness C1 must be > 0");
  const double delta = witness.exponent;
  const double head = std::pow(witness.C2, kappa) / kappa;
  const double tail = std::pow(t, -kappa / delta) * std::tgamma(kappa / delta) /
                      (delta * std::pow(witness.C1, kappa / delta));
  return sphere_surface(d) / riesz_c_prime(kappa, d) * (head + tail);
}

double bound_sub_neg_moment(double kappa, const GrowthWitness& witness, double t) {
  if (!(kappa > 0.0)) throw std::invalid_argument("bound_sub_neg_moment: kappa must be > 0");
  if (!(witness.C1 > 0.0))
    throw std::invalid_argument("bound_sub_neg_moment: witness C1 must be > 0");
  const double rho = witness.exponent;
  const double head = std::pow(witness.C2, kappa) / (kappa * std::tgamma(kappa));
  const double tail = std::tgamma(kappa / rho) /
                      (rho * std::tgamma(kappa) * std::pow(t * witness.C1, kappa / rho));
  return head + tail;
}

// ---- exponential moments --------------------------------------------------------

double bound_exp_abs_moment_log(const LevyTriplet& triplet, double kappa, double lambda,
                                double t) {
  if (!triplet.gaussian_zero())
    throw std::invalid_argument("bound_exp_abs_moment: requires Q = 0");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("bound_exp_abs_moment: kappa must be in (0,1]");
  if (!(lambda > 0.0)) throw std::invalid_argument("bound_exp_abs_moment: lambda must be > 0");
  const int d = triplet.dim();
  const LevyMeasure& nu = triplet.nu;

  QuadratureResult tail_exp = nu.exp_moment(lambda, kappa, NuRegion::outer);
  if (!tail_exp.ok()) return kInf;
  QuadratureResult inner2 = nu.radial_integral([](double r) { return r * r; }, 2.0, 0.0, 1.0);
  QuadratureResult mass = nu.tail_mass(1.0);

  const double c1 = 0.5 * d * kappa * (lambda * kappa + 3.0 - kappa) *
                    std::exp(2.0 * lambda) * inner2.value;
  const double c2 = std::exp(lambda) * tail_exp.value - mass.value;

  const double drift_term =
      lambda * std::pow(triplet.drift_norm(), kappa) * std::pow(t, kappa);

  auto eps_term = [&](double eps) {
    return lambda * std::pow(eps, 0.5 * kappa) * (1.0 + c1 * t / eps);
  };
  double jump_small;
  if (c1 * t == 0.0) {
    jump_small = 0.0;  // eps -> 0 limit
  } else {
    const double eps_star =
        std::min(1.0, std::max(1e-300, c1 * t * (2.0 - kappa) / kappa));
    jump_small = std::min(eps_term(eps_star), eps_term(1.0));
  }
  return drift_term + jump_small + c2 * t;
}

double bound_exp_abs_moment(const LevyTriplet& triplet, double kappa, double lambda,
                            double t) {
  const double e = bound_exp_abs_moment_log(triplet, kappa, lambda, t);
  return std::isfinite(e) ? std::exp(e) : kInf;
}

double bound_exp_abs_moment_bv_log(const LevyTriplet& triplet, double kappa, double lambda,
                                   double t) {
  if (!triplet.gaussian_zero())
    throw std::invalid_argument("bound_exp_abs_moment_bv: requires Q = 0");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("bound_exp_abs_moment_bv: kappa must be in (0,1]");
  auto ell_hat = triplet.compensated_drift_norm();
  if (!ell_hat) return kInf;
  QuadratureResult m = triplet.nu.exp_moment_minus_one(lambda, kappa);
  if (!m.ok()) return kInf;
  return lambda * std::pow(*ell_hat, kappa) * std::pow(t, kappa) + m.value * t;
}

double bound_exp_abs_moment_bv(const LevyTriplet& triplet, double kappa, double lambda,
                               double t) {
  const double e = bound_exp_abs_moment_bv_log(triplet, kappa, lambda, t);
  return std::isfinite(e) ? std::exp(e) : kInf;
}

double bound_sub_exp_pos_no_big_jumps_log(const BernsteinFunction& phi, double lambda,
                                          double t) {
  const LevyMeasure& nu = phi.measure();
  QuadratureResult mass = nu.tail_mass(1.0);
  if (mass.value > 0.0)
    throw std::invalid_argument(
        "bound_sub_exp_pos_no_big_jumps: measure must be carried by (0,1)");
  auto h = [lambda](double y) { return std::expm1(lambda * y); };
  QuadratureResult inner = nu.radial_integral(h, 1.0, 0.0, 1.0);
  return lambda + t * (phi.drift() * lambda + inner.value);
}

double bound_sub_exp_pos_no_big_jumps(const BernsteinFunction& phi, double lambda,
                                      double t) {
  return std::exp(bound_sub_exp_pos_no_big_jumps_log(phi, lambda, t));
}

double bound_sub_exp_neg_moment_log(double kappa, double lambda,
                                    const GrowthWitness& witness, double t) {
  if (!(kappa > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("bound_sub_exp_neg_moment: kappa, lambda must be > 0");
  const double rho = witness.exponent;
  if (!(rho > kappa / (1.0 + kappa) && rho <= 1.0))
    throw std::invalid_argument(
        "bound_sub_exp_neg_moment: rho must lie in (kappa/(1+kappa), 1]");
  if (!(witness.C1 > 0.0))
    throw std::invalid_argument("bound_sub_exp_neg_moment: witness C1 must be > 0");

  const double eps = 1.0 + kappa - kappa / rho;  // in (0,1] by the rho range
  const double g = witness.C2 > 0.0
                       ? lambda * std::pow(witness.C2, kappa) * std::exp(kappa + 1.0) *
                             std::pow(kappa, -kappa)
                       : 0.0;
  const double h = std::exp(kappa + 1.0) / std::pow(kappa, kappa) *
                   std::pow(kappa / (rho * M_E * witness.C1), kappa / rho) * lambda /
                   std::pow(t, kappa / rho);
  const double w = std::exp(rho / (12.0 * kappa)) / std::sqrt(2.0 * M_PI * rho);

  const double g_coeff = 2.0 + 1.0 / (M_PI * M_PI * kappa) + 1.0 / (M_PI * std::sqrt(kappa));
  return g_coeff * g + eps * std::pow(2.0 * h, 1.0 / eps) +
         std::pow(2.0, 2.0 - eps) * w * (2.0 * w + 1.0) * h;
}

double bound_sub_exp_neg_moment(double kappa, double lambda, const GrowthWitness& witness,
                                double t) {
  const double e = bound_sub_exp_neg_moment_log(kappa, lambda, witness, t);
  return std::isfinite(e) ? std::exp(e) : kInf;
}

}  // namespace levym
