#include "levym/indices.hpp"

#include <cmath>
#include <stdexcept>

namespace levym {

namespace {

IndexEstimate fit(const std::function<double(double)>& g, double lo, double hi, int points,
                  double threshold) {
  SlopeEstimate se = loglog_slope_window(g, lo, hi, points);
  IndexEstimate est;
  est.value = se.slope;
  est.residual = se.residual;
  est.resolved = se.residual <= threshold;
  return est;
}

IndexEstimate clamp01(IndexEstimate e) {
  e.value = std::min(1.0, std::max(0.0, e.value));
  return e;
}

// delta indices need Re psi > 0 on the grid; a vanishing real part resolves
// to delta_inf = 0 and delta_0 = +inf (empty index sets)
bool repsi_positive(const CharacteristicExponent& psi, double lo, double hi, int points,
                    double floor) {
  for (int i = 0; i < points; ++i) {
    const double r = lo * std::pow(hi / lo, points > 1 ? double(i) / (points - 1) : 0.0);
    if (!(psi(r).real() > floor)) return false;
  }
  return true;
}

void fill_symbol_indices(IndexReport* rep, const CharacteristicExponent& psi,
                         const IndexOptions& opts) {
  auto abs_psi = [&psi](double r) { return std::abs(psi(r)); };
  auto re_psi = [&psi](double r) { return psi(r).real(); };

  rep->beta0 = fit(abs_psi, opts.near_lo, opts.near_hi, opts.points,
                   opts.residual_threshold);
  rep->beta_inf = fit(abs_psi, opts.far_lo, opts.far_hi, opts.points,
                      opts.residual_threshold);

  if (repsi_positive(psi, opts.near_lo, opts.near_hi, opts.points, opts.positivity_floor)) {
    rep->delta0 = fit(re_psi, opts.near_lo, opts.near_hi, opts.points,
                      opts.residual_threshold);
  } else {
    rep->delta0 = {kInf, 0.0, true};
  }
  if (repsi_positive(psi, opts.far_lo, opts.far_hi, opts.points, opts.positivity_floor)) {
    rep->delta_inf = fit(re_psi, opts.far_lo, opts.far_hi, opts.points,
                         opts.residual_threshold);
  } else {
    rep->delta_inf = {0.0, 0.0, true};
  }
}

}  // namespace

IndexReport estimate_indices(const BernsteinFunction& phi, const IndexOptions& opts) {
  IndexReport rep;
  rep.subject = phi.name().empty() ? "bernstein" : phi.name();
  rep.has_subordinator_indices = true;

  auto f = [&phi](double u) { return phi(u); };
  IndexEstimate near = clamp01(
      fit(f, opts.near_lo, opts.near_hi, opts.points, opts.residual_threshold));
  IndexEstimate far =
      clamp01(fit(f, opts.far_lo, opts.far_hi, opts.points, opts.residual_threshold));
  // sup- and inf-type variants coincide with the regression slope whenever the
  // fit is clean; unresolved fits keep the slope but are flagged
  rep.sigma0 = near;
  rep.rho0 = near;
  rep.rho_inf = far;
  rep.sigma_inf = far;

  fill_symbol_indices(&rep, symbol_from_bernstein(phi), opts);
  return rep;
}

IndexReport estimate_indices(const CharacteristicExponent& psi, const IndexOptions& opts) {
  IndexReport rep;
  rep.subject = psi.source();
  fill_symbol_indices(&rep, psi, opts);
  return rep;
}

LiminfCheck liminf_positive(const BernsteinFunction& phi, double rho, Regime regime,
                            double floor, double slope_tol) {
  LiminfCheck check;
  double lo, hi;
  if (regime == Regime::to_infinity) {
    lo = 1e3;
    hi = 1e6;
  } else {
    lo = 1e-6;
    hi = 1e-3;
  }
  check.grid_lo = lo;
  check.grid_hi = hi;
  const int n = 48;
  double min_ratio = kInf;
  for (int i = 0; i < n; ++i) {
    const double u = lo * std::pow(hi / lo, double(i) / (n - 1));
    min_ratio = std::min(min_ratio, phi(u) * std::pow(u, -rho));
  }
  check.proxy = min_ratio;
  auto g = [&](double u) { return phi(u) * std::pow(u, -rho); };
  bool trend_ok = false;
  if (min_ratio > floor) {
    // trend over an extended window; 3 decades alone cannot separate a
    // logarithm from a small power
    const double tlo = (regime == Regime::to_infinity) ? lo : lo * 1e-3;
    const double thi = (regime == Regime::to_infinity) ? hi * 1e3 : hi;
    SlopeEstimate se = loglog_slope_window(g, tlo, thi, n);
    check.trend_slope = se.slope;
    // towards infinity the ratio must not fall; towards zero it must not fall
    // as u decreases, i.e. its log-log slope must not be positive
    trend_ok = (regime == Regime::to_infinity) ? se.slope >= -slope_tol
                                               : se.slope <= slope_tol;
  }
  check.positive = min_ratio > floor && trend_ok;
  return check;
}

LimsupCheck limsup_finite_at_zero(const BernsteinFunction& phi, double sigma, double cap,
                                  double slope_tol) {
  LimsupCheck check;
  const double lo = 1e-6, hi = 1e-3;
  const int n = 48;
  double max_ratio = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = lo * std::pow(hi / lo, double(i) / (n - 1));
    max_ratio = std::max(max_ratio, phi(u) * std::pow(u, -sigma));
  }
  check.sup = max_ratio;
  auto g = [&](double u) { return phi(u) * std::pow(u, -sigma); };
  SlopeEstimate se = loglog_slope_window(g, lo, hi, n);
  check.trend_slope = se.slope;
  // ratio blowing up as u -> 0 shows as a negative slope in u
  check.finite = max_ratio < cap && se.slope >= -slope_tol;
  return check;
}

HypothesisReport check_hypotheses(const BernsteinFunction& phi, double kappa1,
                                  double kappa2, std::optional<double> rho,
                                  std::optional<double> sigma, const IndexOptions& opts) {
  if (!(kappa1 > 0.0)) throw std::invalid_argument("check_hypotheses: kappa1 must be > 0");
  if (!(kappa2 > 0.0 && kappa2 <= 1.0))
    throw std::invalid_argument("check_hypotheses: kappa2 must be in (0,1]");

  HypothesisReport rep;
  IndexReport idx = estimate_indices(phi, opts);

  rep.witness_rho = rho.value_or(0.9 * std::max(idx.rho_inf.value, 0.0));
  if (rep.witness_rho > 0.0) {
    LiminfCheck lc = liminf_positive(phi, rep.witness_rho, Regime::to_infinity);
    rep.h1 = lc.positive;
    rep.liminf_proxy = lc.proxy;
  }

  rep.h2 = phi.measure().frac_moment(kappa2, NuRegion::outer).ok();

  // h3: the finiteness region in theta is an interval; scan [kappa2, 1]
  const int kThetaGrid = 33;
  double best = kInf;
  for (int i = 0; i < kThetaGrid; ++i) {
    const double theta = kappa2 + (1.0 - kappa2) * double(i) / (kThetaGrid - 1);
    QuadratureResult q = phi.measure().frac_moment(theta, NuRegion::full);
    if (q.ok() && q.value < best) {
      best = q.value;
      rep.h3_theta = theta;
    }
  }
  if (phi.measure().is_zero()) {
    rep.h3 = true;
    rep.h3_value = 0.0;
    rep.h3_theta = kappa2;
  } else if (std::isfinite(best)) {
    rep.h3 = true;
    rep.h3_value = best;
  }

  rep.witness_sigma = sigma.value_or(0.9 * std::max(idx.sigma0.value, 0.0));
  if (rep.witness_sigma > 0.0 && kappa2 < rep.witness_sigma) {
    LimsupCheck ls = limsup_finite_at_zero(phi, rep.witness_sigma);
    rep.h4 = ls.finite;
    rep.limsup_proxy = ls.sup;
  }
  return rep;
}

}  // namespace levym
