#include "levym/minimize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace levym {

MinimizeResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                           int grid_points, double x_tol) {
  if (!(hi > lo)) {
    if (hi == lo) return {lo, f(lo)};
    throw std::invalid_argument("minimize_1d: empty interval");
  }
  if (grid_points < 3) grid_points = 3;

  std::vector<double> xs(grid_points), fs(grid_points);
  const double h = (hi - lo) / (grid_points - 1);
  int best = 0;
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = lo + i * h;
    fs[i] = f(xs[i]);
    if (fs[i] < fs[best]) best = i;
  }

  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best + 1 < grid_points ? best + 1 : grid_points - 1];

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);

  MinimizeResult res{xm, fm};
  if (fs[best] < fm) res = {xs[best], fs[best]};  // guard against golden step escaping the dip
  if (f1 < res.min) res = {x1, f1};
  if (f2 < res.min) res = {x2, f2};
  return res;
}

}  // namespace levym
