#include "levym/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace levym {
namespace {

// integral of f over [s, inf) through u = s/v; a power-law tail f ~ u^p
// turns into v^{-p-2}, so the endpoint substitution is reapplied when the
// probed exponent leaves an integrable singularity at v = 0
levym::QuadratureResult mapped_tail(const std::function<double(double)>& f, double s,
                                    double rel_tol, int max_subdivisions);

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (positive half; nodes are
// symmetric and strictly interior, so endpoint singularities are never hit).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  double kronrod = 0.0;
  double err = 0.0;
  double min_abs = 0.0;  // min |f| over the sampled nodes (for lower sums)
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNodes[i]);
    fv[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fv[7] = f(c);

  double kron = 0.0, gauss = 0.0, min_abs = std::abs(fv[7]);
  for (int i = 0; i < 8; ++i) {
    const double pair = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
    kron += kKronrodWeights[i] * pair;
    min_abs = std::min({min_abs, std::abs(fv[i]), std::abs(fv[14 - i])});
  }
  // Gauss-7 uses the odd Kronrod nodes (indices 1,3,5,7).
  gauss = kGaussWeights[0] * (fv[1] + fv[13]) + kGaussWeights[1] * (fv[3] + fv[11]) +
          kGaussWeights[2] * (fv[5] + fv[9]) + kGaussWeights[3] * fv[7];

  PanelEstimate out;
  out.kronrod = kron * h;
  out.min_abs = min_abs;
  const double diff = std::abs(kron - gauss) * h;
  // QUADPACK-style sharpened error estimate.
  out.err = diff;
  if (diff > 0.0) {
    const double scaled = std::pow(200.0 * diff / (std::abs(out.kronrod) + 1e-300), 1.5);
    if (scaled < 1.0) out.err = std::abs(out.kronrod) * scaled + 1e-300;
  }
  return out;
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace

namespace {

QuadratureResult mapped_tail(const std::function<double(double)>& f, double s,
                             double rel_tol, int max_subdivisions) {
  auto g = [&f, s](double v) { return f(s / v) * s / (v * v); };

  // probe the decay exponent of f well past the split (the first octaves sit
  // in a transition region and bias the fit)
  double p = -kInf;
  const double f2 = f(16.0 * s), f8 = f(64.0 * s);
  if (f2 > 0.0 && f8 > 0.0 && std::isfinite(f2) && std::isfinite(f8)) {
    p = std::log(f8 / f2) / std::log(4.0);
  }
  const double a_v = -p - 2.0;  // exponent of g at v = 0
  if (p > -kInf && a_v > -1.0 && a_v < -1e-9) {
    const double q = 1.0 / (1.0 + a_v);
    auto h = [&g, q](double w) { return g(std::pow(w, q)) * q * std::pow(w, q - 1.0); };
    return integrate_finite(h, 0.0, 1.0, rel_tol, max_subdivisions);
  }
  return integrate_finite(g, 0.0, 1.0, rel_tol, max_subdivisions);
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double rel_tol,
                                  int max_subdivisions) {
  QuadratureResult res;
  if (!(b > a)) return res;

  std::priority_queue<Segment> queue;
  PanelEstimate first = gk15(f, a, b);
  queue.push({a, b, first.kronrod, first.err});
  double total = first.kronrod, total_err = first.err;
  int splits = 0;

  while (total_err > std::max(rel_tol * std::abs(total), 1e-300) &&
         total_err > 1e-16 * (std::abs(total) + 1.0) && splits < max_subdivisions) {
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted at double precision
      queue.push(worst);
      break;
    }
    PanelEstimate left = gk15(f, worst.a, mid);
    PanelEstimate right = gk15(f, mid, worst.b);
    total += left.kronrod + right.kronrod - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push({worst.a, mid, left.kronrod, left.err});
    queue.push({mid, worst.b, right.kronrod, right.err});
    ++splits;
  }

  res.value = total;
  res.abs_error = total_err;
  res.subdivisions = splits;
  if (!std::isfinite(total)) {
    res.status = IntegralStatus::undecided;
    res.certificate = "non-finite quadrature sum on finite interval";
  }
  return res;
}

QuadratureResult integrate_semiinf(const std::function<double(double)>& f,
                                   double singularity_exponent,
                                   const SemiInfOptions& opts) {
  QuadratureResult res;
  const double a_sing = singularity_exponent;
  const double lo = std::max(0.0, opts.support_lo);
  const double hi = opts.support_hi;
  if (hi <= lo) return res;

  if (a_sing <= -1.0 && lo == 0.0) {
    if (opts.check_divergence) {
      res.status = IntegralStatus::divergent;
      res.value = kInf;
      res.certificate = "non-integrable endpoint: integrand exponent <= -1 at 0";
      return res;
    }
    throw std::invalid_argument("integrate_semiinf: endpoint exponent <= -1");
  }

  double split = opts.scale;
  if (!(split > lo)) split = lo;      // degenerate head
  if (split > hi) split = hi;

  double value = 0.0, err = 0.0;
  int splits = 0;

  // Head [lo, split], regularised when the declared exponent is in (-1,0).
  // Wide heads are walked in octaves: a single adaptive call over many
  // decades can miss an integrand concentrated near the left end (every
  // quadrature node lands in the flat tail and the error estimate vanishes).
  if (split > lo) {
    double base = std::min(split, lo > 0.0 ? 2.0 * lo : 1.0);
    if (lo == 0.0 && a_sing < -1e-12) {
      const double p = 1.0 / (1.0 + a_sing);
      const double s = base;
      auto g = [&](double w) {
        const double u = s * std::pow(w, p);
        return f(u) * s * p * std::pow(w, p - 1.0);
      };
      QuadratureResult head = integrate_finite(g, 0.0, 1.0, opts.rel_tol,
                                               opts.max_subdivisions / 2);
      value += head.value;
      err += head.abs_error;
      splits += head.subdivisions;
    } else {
      QuadratureResult head = integrate_finite(f, lo, base, opts.rel_tol,
                                               opts.max_subdivisions / 2);
      value += head.value;
      err += head.abs_error;
      splits += head.subdivisions;
    }
    while (base < split) {
      const double next = std::min(2.0 * base, split);
      QuadratureResult part = integrate_finite(f, base, next, opts.rel_tol,
                                               opts.max_subdivisions / 4);
      value += part.value;
      err += part.abs_error;
      splits += part.subdivisions + 1;
      base = next;
    }
  }

  // Tail [split, hi).
  if (hi < kInf) {
    if (hi > split) {
      QuadratureResult tail = integrate_finite(f, split, hi, opts.rel_tol,
                                               opts.max_subdivisions / 2);
      value += tail.value;
      err += tail.abs_error;
      splits += tail.subdivisions;
    }
  } else if (!opts.check_divergence) {
    const double s = split > 0.0 ? split : 1.0;
    QuadratureResult tail = mapped_tail(f, s, opts.rel_tol, opts.max_subdivisions / 2);
    value += tail.value;
    err += tail.abs_error;
    splits += tail.subdivisions;
  } else {
    // Doubling panels with lower Riemann sums; decides convergence vs blow-up
    // for a nonnegative integrand. Tails that merely decay slowly (panels
    // shrinking but not negligible) are finished through the 1/u map.
    const double s = split > 0.0 ? split : 1.0;
    double lower_sum = 0.0;
    double prev_panel = kInf;
    int calm = 0, shrinking = 0;
    const int kMaxPanels = 220;
    bool settled = false;
    for (int k = 0; k < kMaxPanels; ++k) {
      const double pa = s * std::pow(2.0, k);
      const double pb = 2.0 * pa;
      QuadratureResult panel = integrate_finite(f, pa, pb, opts.rel_tol, 200);
      PanelEstimate probe = gk15(f, pa, pb);
      lower_sum += probe.min_abs * (pb - pa);
      value += panel.value;
      err += panel.abs_error;
      splits += panel.subdivisions + 1;

      if (lower_sum > opts.divergence_cap || value > opts.divergence_cap) {
        res.value = kInf;
        res.abs_error = 0.0;
        res.subdivisions = splits;
        res.status = IntegralStatus::divergent;
        res.certificate = "lower Riemann sum exceeded cap " +
                          std::to_string(opts.divergence_cap) + " on doubling panels";
        return res;
      }
      if (panel.value <= opts.rel_tol * std::abs(value) + opts.abs_floor &&
          panel.value <= prev_panel) {
        if (++calm >= 2) {
          const double r = prev_panel > 0.0 ? panel.value / prev_panel : 0.0;
          if (r > 0.0 && r < 1.0) err += panel.value * r / (1.0 - r);
          settled = true;
          break;
        }
      } else {
        calm = 0;
      }
      // strict shrinking only: a flat tail (integrand ~ 1/u) must not be
      // handed to the map below, it would hide genuine divergence
      shrinking = panel.value <= prev_panel * (1.0 - 5e-4) ? shrinking + 1 : 0;
      prev_panel = panel.value;
      if (shrinking >= 6) {
        QuadratureResult rest = mapped_tail(f, pb, opts.rel_tol, opts.max_subdivisions / 2);
        value += rest.value;
        err += rest.abs_error;
        splits += rest.subdivisions;
        settled = std::isfinite(rest.value) &&
                  rest.abs_error <= 0.05 * (std::abs(value) + 1.0);
        break;
      }
    }
    if (!settled) {
      res.value = value;
      res.abs_error = err;
      res.subdivisions = splits;
      res.status = IntegralStatus::undecided;
      res.certificate = "tail neither converged nor exceeded divergence cap";
      return res;
    }
  }

  res.value = value;
  res.abs_error = err;
  res.subdivisions = splits;
  if (!std::isfinite(value)) {
    res.status = IntegralStatus::divergent;
    res.value = kInf;
    res.certificate = "non-finite quadrature sum";
  }
  return res;
}

QuadratureResult integrate_oscillatory_tail(const std::function<double(double)>& envelope,
                                            double xi, bool use_sin,
                                            double y0, double support_hi,
                                            double rel_tol) {
  QuadratureResult res;
  if (xi <= 0.0) throw std::invalid_argument("integrate_oscillatory_tail: xi must be > 0");
  auto f = [&](double y) {
    return envelope(y) * (use_sin ? std::sin(xi * y) : std::cos(xi * y));
  };

  if (support_hi < kInf) {
    if ((support_hi - y0) * xi < 64.0) return integrate_finite(f, y0, support_hi, rel_tol, 2000);
    // fall through: finite but many periods; same panel walk below with a hard stop
  }

  const double half_period = M_PI / xi;
  double total = 0.0, err = 0.0, last_mag = 0.0, peak = 0.0;
  int tiny_streak = 0;
  const int kMaxPanels = 4000;
  double y = y0;
  for (int j = 0; j < kMaxPanels; ++j) {
    double yb = y + half_period;
    bool last = false;
    if (yb >= support_hi) {
      yb = support_hi;
      last = true;
    }
    QuadratureResult panel = integrate_finite(f, y, yb, rel_tol, 64);
    total += panel.value;
    err += panel.abs_error;
    res.subdivisions += panel.subdivisions + 1;
    last_mag = std::abs(panel.value);
    peak = std::max(peak, last_mag);
    if (last) break;
    // alternating-series stop: once panels are tiny relative to the running
    // total (or to the largest panel seen) the remainder is below tolerance
    if (last_mag <= rel_tol * std::max(std::abs(total), peak) + 1e-300) {
      if (++tiny_streak >= 3) break;
    } else {
      tiny_streak = 0;
    }
    y = yb;
  }
  // alternating-series truncation: remainder bounded by the last half-period
  err += last_mag;
  res.value = total;
  res.abs_error = err;
  return res;
}

}  // namespace levym
