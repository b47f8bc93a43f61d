#pragma once

#include <optional>
#include <string>

#include "levym/bernstein.hpp"
#include "levym/slope.hpp"
#include "levym/symbol.hpp"

namespace levym {

/// One growth index estimated by log-log slope regression. `resolved` is
/// false when the fit residual exceeds the acceptance threshold (the growth
/// is not a clean power in that regime and sup/inf variants may differ).
struct IndexEstimate {
  double value = 0.0;
  double residual = 0.0;
  bool resolved = false;
};

/// The eight growth indices.
///
/// For a subordinator (through phi):  sigma0, rho0 at 0 and rho_inf,
/// sigma_inf at infinity, all in [0,1]. For a general symbol: beta indices
/// from |psi|, delta indices from Re psi, at 0 and at infinity. A Bernstein
/// subject fills both groups (the symbol group through phi(-i xi)).
struct IndexReport {
  bool has_subordinator_indices = false;
  IndexEstimate sigma0, rho0, sigma_inf, rho_inf;
  IndexEstimate beta0, beta_inf, delta0, delta_inf;
  std::string subject;
};

struct IndexOptions {
  double residual_threshold = 0.05;
  // windows for the slope fits; wide enough that slowly varying factors
  // (logarithms) bias a power fit by well under the acceptance tolerance
  double near_lo = 1e-13, near_hi = 1e-7;
  double far_lo = 1e7, far_hi = 1e13;
  int points = 48;
  double positivity_floor = 1e-300;  // Re psi below this counts as zero
};

IndexReport estimate_indices(const BernsteinFunction& phi, const IndexOptions& opts = {});
IndexReport estimate_indices(const CharacteristicExponent& psi,
                             const IndexOptions& opts = {});

/// Numerical proxy of liminf phi(u) u^{-rho} > 0 (to_infinity) or of the
/// analogous statement at 0: grid minimum above a floor with a non-falling
/// trend. `proxy` is the grid minimum, reusable as the constant C1 in the
/// growth witness phi(u) >= C1 u^rho for u >= C2.
struct LiminfCheck {
  bool positive = false;
  double proxy = 0.0;        // grid minimum of phi(u) u^{-rho}
  double trend_slope = 0.0;  // slope of the ratio over the grid
  double grid_lo = 0.0, grid_hi = 0.0;
};

LiminfCheck liminf_positive(const BernsteinFunction& phi, double rho, Regime regime,
                            double floor = 1e-10, double slope_tol = 1e-3);

/// limsup phi(u) u^{-sigma} < inf as u -> 0: grid maximum below a cap with a
/// trend that does not blow up towards 0.
struct LimsupCheck {
  bool finite = false;
  double sup = 0.0;
  double trend_slope = 0.0;
};

LimsupCheck limsup_finite_at_zero(const BernsteinFunction& phi, double sigma,
                                  double cap = 1e10, double slope_tol = 1e-3);

/// Moment-condition report for the exponents (kappa1, kappa2):
///  h1: kappa1 > 0 and liminf_{u->inf} phi(u) u^{-rho} > 0 for the witness rho
///  h2: int_{y>=1} y^{kappa2} nu(dy) < inf
///  h3: inf over theta in [kappa2,1] of int_{y>0} y^theta nu(dy) < inf
///  h4: kappa2 < sigma with limsup_{u->0} phi(u) u^{-sigma} < inf
/// h4 implies h2.
struct HypothesisReport {
  bool h1 = false, h2 = false, h3 = false, h4 = false;
  double witness_rho = 0.0;
  double witness_sigma = 0.0;
  double liminf_proxy = 0.0;   // grid minimum feeding C1
  double limsup_proxy = 0.0;   // grid maximum for the sigma check
  double h3_theta = 0.0;       // a theta with finite full moment, when h3 holds
  double h3_value = 0.0;
};

HypothesisReport check_hypotheses(const BernsteinFunction& phi, double kappa1,
                                  double kappa2, std::optional<double> rho = {},
                                  std::optional<double> sigma = {},
                                  const IndexOptions& opts = {});

}  // namespace levym
