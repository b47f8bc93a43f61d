#pragma once

#include <string>

#include "levym/bernstein.hpp"
#include "levym/indices.hpp"
#include "levym/symbol.hpp"
#include "levym/triplet.hpp"

namespace levym {

enum class MomentMethod { exact_quadrature, closed_form, monte_carlo, bound };

/// Extended-real moment value. `value` is +inf only together with a
/// certificate naming the numerical witness or the analytic criterion.
struct MomentEstimate {
  double value = 0.0;
  double abs_error = 0.0;
  MomentMethod method = MomentMethod::exact_quadrature;
  std::string certificate;
  bool undecided = false;

  bool finite() const { return std::isfinite(value) && !undecided; }
  bool infinite() const { return value == kInf && !undecided; }
};

// --- subordinator moments via the Laplace exponent ---------------------------

/// E S_t^{-kappa} = (1/Gamma(kappa)) int_0^inf u^{kappa-1} e^{-t phi(u)} du.
MomentEstimate sub_neg_moment_exact(const BernsteinFunction& phi, double kappa, double t,
                                    double rel_tol = 1e-10);

/// E S_t^kappa for kappa in (0,1]:
///   (kappa/Gamma(1-kappa)) int_0^inf (1 - e^{-t phi(u)}) u^{-kappa-1} du,
/// and t phi'(0+) at kappa = 1.
MomentEstimate sub_pos_moment_exact(const BernsteinFunction& phi, double kappa, double t,
                                    double rel_tol = 1e-10);

/// E e^{lambda S_t^{-kappa}} = 1 + int_0^inf e^{-t phi(u)} k(u) du with
/// k(u) = sum_n lambda^n u^{n kappa - 1} / (n! Gamma(n kappa)).
/// Divergence is decided first by the index predicate
/// kappa > sigma_inf/(1-sigma_inf) (for sigma_inf < 1), then numerically;
/// `use_index_predicate = false` forces the purely numerical route.
MomentEstimate sub_exp_neg_moment_exact(const BernsteinFunction& phi, double kappa,
                                        double lambda, double t, double rel_tol = 1e-9,
                                        bool use_index_predicate = true);

// --- general Levy moments via the symbol -------------------------------------

/// E|X_t|^kappa for kappa in (0,2) through the fractional-kernel identity
///   E|X_t|^kappa = c_kd s_d int_0^inf (1 - Re e^{-t psi(r)}) r^{-kappa-1} dr.
MomentEstimate levy_abs_moment_exact(const CharacteristicExponent& psi, double kappa,
                                     double t, double rel_tol = 1e-10);

/// Upper bound (not the exact value)
///   E|X_t|^{-kappa} <= (s_d / c'_kd) int_0^inf r^{kappa-1} e^{-t Re psi(r)} dr,
/// kappa in (0,d).
MomentEstimate levy_neg_moment_upper(const CharacteristicExponent& psi, double kappa,
                                     double t, double rel_tol = 1e-10);

// --- finiteness classification ------------------------------------------------

enum class MomentKind { abs, exp_abs, neg, exp_neg };

struct MomentQuery {
  MomentKind kind = MomentKind::abs;
  double kappa = 0.5;
  double lambda = 1.0;  // exp kinds only
};

enum class Finiteness { finite, infinite, unknown };

struct FinitenessReport {
  Finiteness decision = Finiteness::unknown;
  std::string reason;
};

FinitenessReport classify_finiteness(const LevyTriplet& triplet,
                                     const CharacteristicExponent& psi,
                                     const MomentQuery& query);
FinitenessReport classify_finiteness(const BernsteinFunction& phi, const MomentQuery& query);

// --- reference closed forms ---------------------------------------------------

/// E S_t^kappa for the Gamma subordinator: Gamma(alpha t + kappa) /
/// (beta^kappa Gamma(alpha t)); +inf when alpha t + kappa <= 0.
double gamma_subordinator_moment(double alpha, double beta, double kappa, double t);

/// E S_t^kappa for the stable subordinator (phi = u^alpha), kappa < alpha:
/// t^{kappa/alpha} Gamma(1 - kappa/alpha) / Gamma(1 - kappa); +inf otherwise.
double stable_subordinator_moment(double alpha, double kappa, double t);

/// E e^{lambda S_t} for the Gamma subordinator, lambda < beta.
double gamma_subordinator_mgf(double alpha, double beta, double lambda, double t);

/// E e^{lambda (y N_t)^kappa} for a Poisson process of rate eta and jump y.
double poisson_exp_moment(double eta, double y, double lambda, double kappa, double t);

/// E|X_t|^kappa for Brownian motion with psi = |xi|^2/2 (covariance t I).
double gaussian_abs_moment(int d, double kappa, double t);
/// E|X_t|^{-kappa}, kappa in (0,d), same normalisation.
double gaussian_neg_moment(int d, double kappa, double t);

}  // namespace levym
