#pragma once

#include <functional>

namespace levym {

struct MinimizeResult {
  double argmin = 0.0;
  double min = 0.0;
};

/// 64-point grid scan followed by golden-section refinement around the best
/// bracket. Robust against mild non-unimodality; exact to f-tolerance for
/// unimodal objectives.
MinimizeResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                           int grid_points = 64, double x_tol = 1e-10);

}  // namespace levym
