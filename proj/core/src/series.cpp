#include "levym/series.hpp"

#include <cmath>
#include <limits>

namespace levym {

SeriesResult sum_series(const std::function<double(long)>& term, SeriesMode mode,
                        const SeriesOptions& opts) {
  SeriesResult res;
  double prev = std::numeric_limits<double>::infinity();
  int nondecreasing = 0;

  for (long n = 1; n <= opts.max_terms; ++n) {
    const double t = term(n);
    res.terms_used = n;
    if (!std::isfinite(t)) {
      res.divergent = true;
      res.value = std::numeric_limits<double>::infinity();
      res.certificate = "non-finite term at n=" + std::to_string(n);
      return res;
    }
    res.value += t;

    const double mag = std::abs(t);
    if (mode == SeriesMode::all_positive) {
      if (res.value > opts.cap) {
        res.divergent = true;
        res.value = std::numeric_limits<double>::infinity();
        res.certificate = "partial sum exceeded cap " + std::to_string(opts.cap);
        return res;
      }
      if (mag >= prev && mag > 0.0) {
        if (++nondecreasing >= opts.divergence_window) {
          res.divergent = true;
          res.value = std::numeric_limits<double>::infinity();
          res.certificate = std::to_string(opts.divergence_window) +
                            " consecutive non-decreasing terms";
          return res;
        }
      } else {
        nondecreasing = 0;
      }
    }

    if (mag <= opts.rel_tol * std::abs(res.value) + 1e-300 && mag < prev) {
      // geometric tail bound from the last observed ratio
      const double r = prev > 0.0 && std::isfinite(prev) ? mag / prev : 0.0;
      res.tail_bound = (r > 0.0 && r < 1.0) ? mag * r / (1.0 - r) : mag;
      return res;
    }
    prev = mag;
  }

  res.undecided = true;
  res.certificate = "max_terms exhausted without convergence or divergence decision";
  return res;
}

}  // namespace levym
