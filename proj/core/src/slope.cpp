#include "levym/slope.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace levym {

SlopeEstimate loglog_slope_window(const std::function<double(double)>& g, double lo,
                                  double hi, int points) {
  if (!(hi > lo && lo > 0.0)) throw std::invalid_argument("loglog_slope: bad window");
  if (points < 2) points = 2;

  std::vector<double> lx(points), ly(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    const double x = std::exp(llo + (lhi - llo) * i / (points - 1));
    const double y = g(x);
    if (!(y > 0.0) || !std::isfinite(y)) {
      throw std::domain_error("loglog_slope: g non-positive or non-finite at u=" +
                              std::to_string(x));
    }
    lx[i] = std::log(x);
    ly[i] = std::log(y);
  }

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < points; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= points;
  my /= points;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < points; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  double ss = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = ly[i] - my - slope * (lx[i] - mx);
    ss += r * r;
  }

  SlopeEstimate est;
  est.slope = slope;
  est.residual = std::sqrt(ss / points);
  est.grid_lo = lo;
  est.grid_hi = hi;
  return est;
}

SlopeEstimate loglog_slope(const std::function<double(double)>& g, Regime regime,
                           const SlopeOptions& opts) {
  const double a = opts.anchor_exponent;
  double lo, hi;
  if (regime == Regime::to_zero) {
    lo = std::pow(10.0, -a - opts.decades);
    hi = std::pow(10.0, -a);
  } else {
    lo = std::pow(10.0, a);
    hi = std::pow(10.0, a + opts.decades);
  }
  return loglog_slope_window(g, lo, hi, opts.points);
}

}  // namespace levym
