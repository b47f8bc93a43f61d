#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "levym/bernstein.hpp"
#include "levym/bounds.hpp"
#include "levym/indices.hpp"

namespace levym {

/// Input shift Harnack inequality for the base semigroup, with exponent
///   C1/t^{kappa1} + C2 t^{kappa2} + C3            (log form)
///   H1/t^{kappa1} + H2 t^{kappa2} + H3, power p   (power form).
/// The constants are opaque numbers (any e- or p-dependence is already
/// folded in by the caller).
struct HarnackProfile {
  enum class Kind { log, power };
  Kind kind = Kind::log;
  double kappa1 = 1.0;  // > 0
  double kappa2 = 0.5;  // in (0,1]
  double C1 = 0.0, C2 = 0.0, C3 = 0.0;
  double H1 = 0.0, H2 = 0.0, H3 = 0.0;
  double p = 2.0;  // > 1, power form only

  static HarnackProfile log_profile(double kappa1, double kappa2, double C1, double C2,
                                    double C3);
  static HarnackProfile power_profile(double kappa1, double kappa2, double H1, double H2,
                                      double H3, double p);
};

enum class LogHarnackCase { a, b, c, auto_select };

struct LedgerEntry {
  std::string name;
  double value = 0.0;
  std::string source;
};

/// Composed exponent Psi(t,e) or Phi(t,p,e) for the subordinate semigroup,
/// with every constant traceable to the operation that produced it. The
/// log form also carries the sharper exact-moment route
///   C1 E S_t^{-kappa1} + C2 E S_t^{kappa2} + C3
/// when both moments are finite.
struct SubordinateExponent {
  double value = 0.0;
  std::optional<double> exact_value;
  char case_used = '-';  // 'a','b','c' for log, 'p' for power
  std::vector<LedgerEntry> ledger;
  HypothesisReport hypotheses;
};

/// Log-form composition. Case selection (auto prefers c over b over a, the
/// slowest large-t growth first):
///   a: large-t moment factor from the small-time split bound, term C2 K (t or 1)
///   b: bounded-variation bound at (t or 1)
///   c: symbol-route bound, term growing like (t or 1)^{kappa2/sigma}
/// The small-t term is C1 times the subordinator negative-moment bound at
/// (t and 1). A hypothesis is only enforced when the constant multiplying the
/// corresponding moment is nonzero.
SubordinateExponent subordinate_log_harnack(const HarnackProfile& profile,
                                            const BernsteinFunction& phi, double t,
                                            LogHarnackCase which = LogHarnackCase::auto_select,
                                            std::optional<double> rho = {},
                                            std::optional<double> sigma = {});

/// Power-form composition for a Hoelder split parameter r > 1:
///   Phi = (r-1)(p-1)/r log-bound of E e^{lambda1 S_t^{-kappa1}}  at (t and 1)
///       + (p-1)/r     log-bound of E e^{lambda2 S_t^{kappa2}}    at (t or 1)
///       + H3,
/// lambda1 = r H1 / ((r-1)(p-1)), lambda2 = r H2 / (p-1). Requires rho in
/// (kappa1/(1+kappa1), rho_inf] with a positive liminf and the jump-tail
/// integrability of e^{lambda2 y^{kappa2}}.
SubordinateExponent subordinate_power_harnack(const HarnackProfile& profile,
                                              const BernsteinFunction& phi, double r,
                                              double t, std::optional<double> rho = {});

/// Profile of the additive-noise SDE coupling:
///   I(t) = (1/t^2) int_0^t gamma_r^2 (r K_r + 1)^2 dr,
/// raw exponents |e|^2 I(t)/2 (log) and p |e|^2 I(t)/(2(p-1)) (power), and a
/// constant C fitted so that I(t) <= 2C (t^{-kappa1} + t^{kappa2} + 1) on a
/// log grid over [1e-4, 1e4].
struct SdeProfileResult {
  double I = 0.0;
  double log_exponent = 0.0;
  double power_exponent = 0.0;
  double fitted_C = 0.0;
  bool small_time_ok = false;  // sup of J(s)/s^{2-kappa1} bounded as s -> 0
  bool large_time_ok = false;  // sup of J(s)/s^{2+kappa2} bounded as s -> inf
  HarnackProfile log_profile;
  HarnackProfile power_profile;
};

SdeProfileResult sde_harnack_profile(const std::function<double(double)>& gamma,
                                     const std::function<double(double)>& K, double e_norm,
                                     double kappa1, double kappa2, double p, double t);

}  // namespace levym
