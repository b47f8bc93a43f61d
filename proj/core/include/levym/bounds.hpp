#pragma once

#include <string>

#include "levym/bernstein.hpp"
#include "levym/indices.hpp"
#include "levym/symbol.hpp"
#include "levym/triplet.hpp"

namespace levym {

/// Concrete pair (C1, C2) for a growth inequality g(u) >= C1 u^exponent on
/// u >= C2 (regime to_infinity) or g(u) <= C1 u^exponent near 0 for upper
/// witnesses. Extracted from grids unless supplied analytically (C2 = 0).
struct GrowthWitness {
  double C1 = 0.0;
  double C2 = 0.0;
  double exponent = 0.0;
  Regime regime = Regime::to_infinity;
  std::string source;

  /// C2 = 10^3, C1 = grid minimum of phi(u) u^{-rho} over [10^3, 10^6].
  static GrowthWitness lower_from_grid(const BernsteinFunction& phi, double rho);
  /// Same construction on Re psi(|xi|).
  static GrowthWitness lower_from_symbol(const CharacteristicExponent& psi, double delta);
  /// Analytic witness valid for all u (C2 = 0).
  static GrowthWitness global(double C1, double exponent);

  /// pointwise check of g >= C1 u^exp on [max(C2,eps), hi]
  bool validate_lower(const std::function<double(double)>& g, double hi = 1e6) const;
};

/// sup of |psi(xi)| |xi|^{-beta} over a log grid on (0,1], or over (0,1e8]
/// when `global_in_xi` (enables the all-t variant of the symbol bound).
double symbol_growth_constant(const CharacteristicExponent& psi, double beta,
                              bool global_in_xi = false);

// ---- absolute-moment bounds (Q = 0 throughout) -------------------------------

/// Three-term small-jump/large-jump split for E|X_t|^kappa, kappa in (0,1]:
///   |ell|^k t^k + (int_{|y|>=1}|y|^k nu) t
///   + 2 ((d/2) k (3-k) int_{|y|<1}|y|^2 nu)^{k/2} [1 + nu(|y|>=1) t]^{1-k/2} t^{k/2}.
double bound_abs_moment_small_time(const LevyTriplet& triplet, double kappa, double t);

/// Bounded-variation route: inf over theta in [kappa,1] of
///   [ |ell_hat|^theta t^theta + (int |y|^theta nu) t ]^{kappa/theta}.
double bound_abs_moment_bv(const LevyTriplet& triplet, double kappa, double t,
                           double* theta_star = nullptr);

/// Symbol route: c_kd s_d t^{kappa/beta} (C_beta/(beta-kappa) + 2/kappa),
/// kappa in (0,beta); valid for t >= 1, or for all t > 0 when the growth
/// constant covers all frequencies (`all_t`).
double bound_abs_moment_symbol(int d, double kappa, double beta, double c_beta, double t,
                               bool all_t = false);

/// Positive subordinator moment through the symbol route at (t or 1):
/// E S_t^kappa <= c_k1 s_1 (t or 1)^{kappa/sigma} (C/(sigma-kappa) + 2/kappa)
/// with C = 2e/(e-1) sup phi(u) u^{-sigma}. kappa in (0,sigma).
double bound_sub_pos_moment_symbol(const BernsteinFunction& phi, double kappa, double sigma,
                                   double t, bool global_in_u = false);

// ---- negative-moment bounds ---------------------------------------------------

/// (s_d / c'_kd) (C2^kappa/kappa + t^{-kappa/delta} Gamma(kappa/delta) /
/// (delta C1^{kappa/delta})), kappa in (0,d), witness on Re psi.
double bound_neg_moment_symbol(int d, double kappa, const GrowthWitness& witness, double t);

/// Subordinator negative moment:
///   C2^k/(k Gamma(k)) + Gamma(k/rho)/(rho Gamma(k) (t C1)^{k/rho}).
double bound_sub_neg_moment(double kappa, const GrowthWitness& witness, double t);

// ---- exponential-moment bounds --------------------------------------------------

/// log E e^{lambda |X_t|^kappa} bound, kappa in (0,1]:
///   lambda |ell|^k t^k + min over eps in (0,1] of
///   [lambda eps^{k/2} (1 + C1 t/eps)] + C2 t,
/// C1 = (d/2) k (lambda k + 3 - k) e^{2 lambda} int_{|y|<1} |y|^2 nu,
/// C2 = e^lambda int_{|y|>=1} e^{lambda |y|^k} nu - nu(|y|>=1).
/// The eps minimiser is closed-form, clamped into (0,1].
double bound_exp_abs_moment_log(const LevyTriplet& triplet, double kappa, double lambda,
                                double t);
double bound_exp_abs_moment(const LevyTriplet& triplet, double kappa, double lambda,
                            double t);

/// Bounded-variation variant: exp[lambda |ell_hat|^k t^k + M_{k,lambda} t].
double bound_exp_abs_moment_bv_log(const LevyTriplet& triplet, double kappa, double lambda,
                                   double t);
double bound_exp_abs_moment_bv(const LevyTriplet& triplet, double kappa, double lambda,
                               double t);

/// No big jumps (nu carried by (0,1)):
///   E e^{lambda S_t^{kappa2}} <= exp[lambda + t (b lambda +
///   int_{(0,1)} (e^{lambda y} - 1) nu(dy))].
double bound_sub_exp_pos_no_big_jumps_log(const BernsteinFunction& phi, double lambda,
                                          double t);
double bound_sub_exp_pos_no_big_jumps(const BernsteinFunction& phi, double lambda,
                                      double t);

/// log E e^{lambda S_t^{-kappa}} bound for rho in (kappa/(1+kappa), 1]:
///   (2 + 1/(pi^2 k) + 1/(pi sqrt k)) G + eps (2H)^{1/eps}
///   + 2^{2-eps} W (2W + 1) H,
/// G = lambda C2^k e^{k+1} k^{-k},
/// H = (e^{k+1}/k^k) (k/(rho e C1))^{k/rho} lambda / t^{k/rho},
/// eps = 1 + k - k/rho, W = e^{rho/(12k)} / sqrt(2 pi rho).
double bound_sub_exp_neg_moment_log(double kappa, double lambda,
                                    const GrowthWitness& witness, double t);
double bound_sub_exp_neg_moment(double kappa, double lambda, const GrowthWitness& witness,
                                double t);

}  // namespace levym
