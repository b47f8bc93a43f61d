#pragma once

#include <functional>
#include <limits>
#include <string>

namespace levym {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class IntegralStatus { ok, divergent, undecided };

/// Result of an adaptive quadrature run. `abs_error` is an estimate, not a
/// rigorous bound; `certificate` is filled when `status == divergent` and
/// names the numerical witness (or analytic criterion) for divergence.
struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
  IntegralStatus status = IntegralStatus::ok;
  std::string certificate;

  bool ok() const { return status == IntegralStatus::ok; }
  bool divergent() const { return status == IntegralStatus::divergent; }
};

struct SemiInfOptions {
  double rel_tol = 1e-10;
  double abs_floor = 1e-14;     // stop refining below this absolute error
  int max_subdivisions = 4000;
  double scale = 1.0;           // split point between the 0-end and the tail
  double support_lo = 0.0;      // integrand vanishes outside [support_lo, support_hi)
  double support_hi = kInf;
  bool check_divergence = false;  // tail handled by panel doubling; f must be >= 0
  double divergence_cap = 1e12;   // cumulative lower Riemann sum above this => divergent
};

/// Adaptive Gauss-Kronrod (7-15) on a finite interval.
QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b,
                                  double rel_tol = 1e-10,
                                  int max_subdivisions = 2000);

/// Integral of f over [support_lo, support_hi) inside [0, inf).
///
/// `singularity_exponent` a declares f(u) ~ u^a as u -> 0; a must be > -1
/// for an integrable endpoint (a <= -1 returns a divergence certificate in
/// check mode and throws otherwise). The 0-end is regularised by the
/// substitution u = scale * w^{1/(1+a)}; the tail is mapped through
/// u = scale/v, or scanned with doubling panels when divergence has to be
/// decided numerically.
QuadratureResult integrate_semiinf(const std::function<double(double)>& f,
                                   double singularity_exponent,
                                   const SemiInfOptions& opts = {});

/// Oscillatory tail integral over [y0, support_hi) of trig(xi*y) * m(y) for a
/// nonnegative, eventually monotone envelope m. Summed over half-period
/// panels with per-panel adaptive quadrature; the alternating-tail truncation
/// error goes into abs_error.
QuadratureResult integrate_oscillatory_tail(const std::function<double(double)>& envelope,
                                            double xi, bool use_sin,
                                            double y0, double support_hi = kInf,
                                            double rel_tol = 1e-10);

}  // namespace levym
