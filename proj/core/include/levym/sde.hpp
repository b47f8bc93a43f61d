#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace levym {

/// dX_t = l(t, X_t) dt + Sigma(t) dW_t on R^d with scalar (isotropic) Sigma.
struct SdeSpec {
  int d = 1;
  std::function<void(double, const double*, double*)> drift;  // l(t,x) into out[d]
  std::function<double(double)> sigma;                        // Sigma(t) > 0
  std::vector<double> x0;
};

/// Estimators of the semigroup functionals entering the shift inequalities:
/// P_t log f(x), P_t[f(.+e)](x), P_t[f^p(.+e)](x) and P_t f(x).
struct ShiftFunctionals {
  double mean_log_f = 0.0, se_log_f = 0.0;
  double mean_f = 0.0, se_f = 0.0;
  double mean_f_shift = 0.0, se_f_shift = 0.0;
  double mean_fp_shift = 0.0, se_fp_shift = 0.0;
  std::size_t n_paths = 0;
  int n_steps = 0;
  bool step_warning = false;  // step count below the stability heuristic
};

/// Euler-Maruyama over n_paths independent paths; f must be positive where
/// log f is consumed. Deterministic in (seed, n_paths, n_steps) regardless of
/// scheduling: paths are organised in seed-derived blocks and block partial
/// sums are merged in index order (blocks may run on a thread pool).
ShiftFunctionals simulate_sde_coupling(const SdeSpec& spec,
                                       const std::function<double(const double*)>& f,
                                       double p, const std::vector<double>& e, double t,
                                       std::size_t n_paths, int n_steps,
                                       std::uint64_t seed);

struct HarnackCheck {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs + 3 se - lhs
  double se_combined = 0.0;
};

/// P_t log f(x) <= log P_t[f(.+e)](x) + exponent, within 3 combined SE.
HarnackCheck verify_shift_log_harnack(const ShiftFunctionals& sim, double exponent);

/// p log P_t f(x) <= log P_t[f^p(.+e)](x) + exponent, within 3 combined SE.
HarnackCheck verify_shift_power_harnack(const ShiftFunctionals& sim, double p,
                                        double exponent);

}  // namespace levym
