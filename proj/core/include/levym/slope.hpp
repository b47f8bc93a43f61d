#pragma once

#include <functional>

namespace levym {

enum class Regime { to_zero, to_infinity };

/// Least-squares slope of log g(u) versus log u over a logarithmic window.
struct SlopeEstimate {
  double slope = 0.0;
  double residual = 0.0;  // RMS residual of the linear fit in log-log space
  double grid_lo = 0.0;
  double grid_hi = 0.0;
};

struct SlopeOptions {
  int decades = 3;
  int points = 48;
  // Left edge of the window: 10^{-3-decades} for to_zero, 10^{3} for
  // to_infinity (so the window is [10^3, 10^{3+decades}]).
  double anchor_exponent = 3.0;
};

/// g must be strictly positive on the sampled grid; throws otherwise.
SlopeEstimate loglog_slope(const std::function<double(double)>& g, Regime regime,
                           const SlopeOptions& opts = {});

/// Same fit on an explicit window [lo, hi].
SlopeEstimate loglog_slope_window(const std::function<double(double)>& g, double lo,
                                  double hi, int points = 48);

}  // namespace levym
