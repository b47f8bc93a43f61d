#include "levym/harnack.hpp"

#include <cmath>
#include <stdexcept>

#include "levym/moments.hpp"
#include "levym/slope.hpp"
#include "levym/triplet.hpp"

namespace levym {

HarnackProfile HarnackProfile::log_profile(double kappa1, double kappa2, double C1,
                                           double C2, double C3) {
  if (!(kappa1 > 0.0)) throw std::invalid_argument("HarnackProfile: kappa1 must be > 0");
  if (!(kappa2 > 0.0 && kappa2 <= 1.0))
    throw std::invalid_argument("HarnackProfile: kappa2 must be in (0,1]");
  if (C1 < 0.0 || C2 < 0.0 || C3 < 0.0)
    throw std::invalid_argument("HarnackProfile: constants must be >= 0");
  HarnackProfile p;
  p.kind = Kind::log;
  p.kappa1 = kappa1;
  p.kappa2 = kappa2;
  p.C1 = C1;
  p.C2 = C2;
  p.C3 = C3;
  return p;
}

HarnackProfile HarnackProfile::power_profile(double kappa1, double kappa2, double H1,
                                             double H2, double H3, double p_) {
  if (!(kappa1 > 0.0)) throw std::invalid_argument("HarnackProfile: kappa1 must be > 0");
  if (!(kappa2 > 0.0 && kappa2 <= 1.0))
    throw std::invalid_argument("HarnackProfile: kappa2 must be in (0,1]");
  if (H1 < 0.0 || H2 < 0.0 || H3 < 0.0)
    throw std::invalid_argument("HarnackProfile: constants must be >= 0");
  if (!(p_ > 1.0)) throw std::invalid_argument("HarnackProfile: p must be > 1");
  HarnackProfile p;
  p.kind = Kind::power;
  p.kappa1 = kappa1;
  p.kappa2 = kappa2;
  p.H1 = H1;
  p.H2 = H2;
  p.H3 = H3;
  p.p = p_;
  return p;
}

namespace {

char pick_case(const HypothesisReport& hyp, bool need_kappa2_term, LogHarnackCase which) {
  if (which == LogHarnackCase::a) return 'a';
  if (which == LogHarnackCase::b) return 'b';
  if (which == LogHarnackCase::c) return 'c';
  if (!need_kappa2_term) return 'a';  // term absent; cases coincide
  if (hyp.h4) return 'c';
  if (hyp.h3) return 'b';
  return 'a';
}

}  // namespace

SubordinateExponent subordinate_log_harnack(const HarnackProfile& profile,
                                            const BernsteinFunction& phi, double t,
                                            LogHarnackCase which,
                                            std::optional<double> rho,
                                            std::optional<double> sigma) {
  if (profile.kind != HarnackProfile::Kind::log)
    throw std::invalid_argument("subordinate_log_harnack: profile must be the log form");
  if (!(t > 0.0)) throw std::invalid_argument("subordinate_log_harnack: t must be > 0");

  SubordinateExponent out;
  out.hypotheses = check_hypotheses(phi, profile.kappa1, profile.kappa2, rho, sigma);
  const HypothesisReport& hyp = out.hypotheses;

  const bool need_neg = profile.C1 > 0.0;
  const bool need_pos = profile.C2 > 0.0;
  out.case_used = pick_case(hyp, need_pos, which);

  double value = profile.C3;
  double exact = profile.C3;
  bool exact_ok = true;

  if (need_neg) {
    if (!hyp.h1)
      throw std::runtime_error(
          "subordinate_log_harnack: hypothesis h1 fails (liminf phi(u) u^{-rho} not "
          "positive for rho=" + std::to_string(hyp.witness_rho) + ")");
    GrowthWitness w = GrowthWitness::lower_from_grid(phi, hyp.witness_rho);
    const double neg = bound_sub_neg_moment(profile.kappa1, w, std::min(t, 1.0));
    value += profile.C1 * neg;
    out.ledger.push_back({"neg_moment_factor", neg,
                          "bound_sub_neg_moment(kappa=" + std::to_string(profile.kappa1) +
                              ", rho=" + std::to_string(w.exponent) +
                              ", C1=" + std::to_string(w.C1) +
                              ", C2=" + std::to_string(w.C2) + ") at t and 1"});

    MomentEstimate m = sub_neg_moment_exact(phi, profile.kappa1, t);
    if (m.finite()) {
      exact += profile.C1 * m.value;
      out.ledger.push_back(
          {"neg_moment_exact", m.value, "sub_neg_moment_exact (sharper route)"});
    } else {
      exact_ok = false;
    }
  }

  if (need_pos) {
    const LevyTriplet sub = subordinator_triplet(phi);
    double pos = 0.0;
    switch (out.case_used) {
      case 'a': {
        if (!hyp.h2)
          throw std::runtime_error(
              "subordinate_log_harnack: hypothesis h2 fails (tail moment of order "
              "kappa2 diverges)");
        const double coeff = bound_abs_moment_small_time(sub, profile.kappa2, 1.0);
        pos = coeff * std::max(t, 1.0);
        out.ledger.push_back({"pos_moment_factor", pos,
                              "bound_abs_moment_small_time at t=1, linear in (t or 1); "
                              "coeff=" + std::to_string(coeff)});
        break;
      }
      case 'b': {
        if (!hyp.h3)
          throw std::runtime_error(
              "subordinate_log_harnack: hypothesis h3 fails (no theta in [kappa2,1] "
              "with finite full moment)");
        pos = bound_abs_moment_bv(sub, profile.kappa2, std::max(t, 1.0));
        out.ledger.push_back(
            {"pos_moment_factor", pos, "bound_abs_moment_bv at (t or 1)"});
        break;
      }
      case 'c': {
        if (!hyp.h4)
          throw std::runtime_error(
              "subordinate_log_harnack: hypothesis h4 fails (kappa2 not below a valid "
              "sigma with bounded phi(u) u^{-sigma} at 0)");
        pos = bound_sub_pos_moment_symbol(phi, profile.kappa2, hyp.witness_sigma, t);
        out.ledger.push_back({"pos_moment_factor", pos,
                              "bound_sub_pos_moment_symbol(sigma=" +
                                  std::to_string(hyp.witness_sigma) +
                                  "), grows like (t or 1)^{kappa2/sigma}"});
        break;
      }
      default: break;
    }
    value += profile.C2 * pos;

    MomentEstimate m = sub_pos_moment_exact(phi, profile.kappa2, t);
    if (m.finite()) {
      exact += profile.C2 * m.value;
      out.ledger.push_back(
          {"pos_moment_exact", m.value, "sub_pos_moment_exact (sharper route)"});
    } else {
      exact_ok = false;
    }
  }

  out.value = value;
  if (exact_ok) out.exact_value = exact;
  out.ledger.push_back({"constant_term", profile.C3, "profile passthrough"});
  return out;
}

SubordinateExponent subordinate_power_harnack(const HarnackProfile& profile,
                                              const BernsteinFunction& phi, double r,
                                              double t, std::optional<double> rho) {
  if (profile.kind != HarnackProfile::Kind::power)
    throw std::invalid_argument("subordinate_power_harnack: profile must be the power form");
  if (!(r > 1.0)) throw std::invalid_argument("subordinate_power_harnack: r must be > 1");
  if (!(t > 0.0)) throw std::invalid_argument("subordinate_power_harnack: t must be > 0");
  const double p = profile.p;
  const double k1 = profile.kappa1, k2 = profile.kappa2;

  SubordinateExponent out;
  out.case_used = 'p';
  out.hypotheses = check_hypotheses(phi, k1, k2, rho, {});

  double value = profile.H3;
  out.ledger.push_back({"constant_term", profile.H3, "profile passthrough"});

  if (profile.H1 > 0.0) {
    const double rho_floor = k1 / (1.0 + k1);
    IndexReport idx = estimate_indices(phi);
    double rho_used = rho.value_or(0.9 * idx.rho_inf.value);
    if (!(rho_used > rho_floor)) {
      throw std::runtime_error(
          "subordinate_power_harnack: no valid rho: need rho in (kappa1/(1+kappa1), "
          "rho_inf] = (" + std::to_string(rho_floor) + ", " +
          std::to_string(idx.rho_inf.value) + "]");
    }
    LiminfCheck lc = liminf_positive(phi, rho_used, Regime::to_infinity);
    if (!lc.positive)
      throw std::runtime_error(
          "subordinate_power_harnack: liminf phi(u) u^{-rho} not positive at rho=" +
          std::to_string(rho_used));
    const double lambda1 = r * profile.H1 / ((r - 1.0) * (p - 1.0));
    GrowthWitness w = GrowthWitness::lower_from_grid(phi, rho_used);
    const double log_neg =
        bound_sub_exp_neg_moment_log(k1, lambda1, w, std::min(t, 1.0));
    const double term = (r - 1.0) * (p - 1.0) / r * log_neg;
    value += term;
    out.ledger.push_back({"exp_neg_term", term,
                          "bound_sub_exp_neg_moment_log(lambda=" + std::to_string(lambda1) +
                              ", rho=" + std::to_string(rho_used) +
                              ") at (t and 1), weight (r-1)(p-1)/r"});
    out.ledger.push_back(
        {"small_t_exponent", k1 / (rho_used - (1.0 - rho_used) * k1),
         "growth order of the exp-neg term in 1/(t and 1)"});
  }

  if (profile.H2 > 0.0) {
    const double lambda2 = r * profile.H2 / (p - 1.0);
    QuadratureResult tail = phi.measure().exp_moment(lambda2, k2, NuRegion::outer);
    if (!tail.ok())
      throw std::runtime_error(
          "subordinate_power_harnack: integrability fails: int_{y>=1} e^{lambda2 "
          "y^{kappa2}} nu(dy) diverges at lambda2=" + std::to_string(lambda2));
    const LevyTriplet sub = subordinator_triplet(phi);
    const double log_pos =
        bound_exp_abs_moment_log(sub, k2, lambda2, std::max(t, 1.0));
    const double term = (p - 1.0) / r * log_pos;
    value += term;
    out.ledger.push_back({"exp_pos_term", term,
                          "bound_exp_abs_moment_log(lambda=" + std::to_string(lambda2) +
                              ") at (t or 1), weight (p-1)/r"});

    // explicit sub-cases when available
    QuadratureResult inner = phi.measure().frac_moment(k2, NuRegion::inner);
    if (inner.ok()) {
      const double alt = bound_exp_abs_moment_bv_log(sub, k2, lambda2, std::max(t, 1.0));
      if (std::isfinite(alt))
        out.ledger.push_back({"exp_pos_term_bv_variant", (p - 1.0) / r * alt,
                              "bounded-variation variant (small jumps kappa2-integrable)"});
    }
    if (phi.measure().tail_mass(1.0).value == 0.0) {
      const double alt =
          bound_sub_exp_pos_no_big_jumps_log(phi, lambda2, std::max(t, 1.0));
      out.ledger.push_back({"exp_pos_term_no_big_jumps_variant", (p - 1.0) / r * alt,
                            "no-big-jumps variant (nu carried by (0,1))"});
    }
  }

  out.value = value;
  return out;
}

SdeProfileResult sde_harnack_profile(const std::function<double(double)>& gamma,
                                     const std::function<double(double)>& K, double e_norm,
                                     double kappa1, double kappa2, double p, double t) {
  if (!(kappa1 >= 1.0))
    throw std::invalid_argument("sde_harnack_profile: kappa1 must be >= 1");
  if (!(kappa2 > 0.0 && kappa2 <= 1.0))
    throw std::invalid_argument("sde_harnack_profile: kappa2 must be in (0,1]");
  if (!(p > 1.0)) throw std::invalid_argument("sde_harnack_profile: p must be > 1");
  if (!(t > 0.0)) throw std::invalid_argument("sde_harnack_profile: t must be > 0");

  auto integrand = [&](double s) {
    const double g = gamma(s);
    const double m = s * K(s) + 1.0;
    return g * g * m * m;
  };
  // gamma may blow up like s^theta (theta > -1/2) at 0
  auto probe = [&](double a, double b) {
    const double ia = integrand(a), ib = integrand(b);
    if (!(ia > 0.0) || !(ib > 0.0)) return 0.0;
    return std::log(ib / ia) / std::log(b / a);
  };
  const double sing = std::min(0.0, probe(1e-10, 1e-9));

  auto J = [&](double s) {
    SemiInfOptions opts;
    opts.support_hi = s;
    opts.scale = s;
    QuadratureResult q = integrate_semiinf(integrand, sing, opts);
    if (!q.ok())
      throw std::runtime_error("sde_harnack_profile: gamma^2 (rK+1)^2 not integrable: " +
                               q.certificate);
    return q.value;
  };

  SdeProfileResult res;
  res.I = J(t) / (t * t);
  res.log_exponent = 0.5 * e_norm * e_norm * res.I;
  res.power_exponent = p * e_norm * e_norm * res.I / (2.0 * (p - 1.0));

  // fitted C: sup of I(s) / (2 (s^{-k1} + s^{k2} + 1)) over a log grid
  double C = 0.0;
  for (int i = 0; i <= 32; ++i) {
    const double s = 1e-4 * std::pow(1e8, i / 32.0);
    const double denom = 2.0 * (std::pow(s, -kappa1) + std::pow(s, kappa2) + 1.0);
    C = std::max(C, J(s) / (s * s) / denom);
  }
  res.fitted_C = C;

  // limsup proxies at the grid edges: bounded values plus a trend that does
  // not blow up when pushing further into the regime
  const double cap = 1e8;
  const double slope_tol = 0.02;
  double small_sup = 0.0, large_sup = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double s_small = 1e-4 * std::pow(10.0, i / 8.0);
    small_sup = std::max(small_sup, J(s_small) / std::pow(s_small, 2.0 - kappa1));
    const double s_large = 1e3 * std::pow(10.0, i / 8.0);
    large_sup = std::max(large_sup, J(s_large) / std::pow(s_large, 2.0 + kappa2));
  }
  auto ratio_small = [&](double s) { return J(s) / std::pow(s, 2.0 - kappa1); };
  auto ratio_large = [&](double s) { return J(s) / std::pow(s, 2.0 + kappa2); };
  const double small_slope = loglog_slope_window(ratio_small, 1e-4, 1e-2, 12).slope;
  const double large_slope = loglog_slope_window(ratio_large, 1e2, 1e4, 12).slope;
  res.small_time_ok = small_sup < cap && small_slope >= -slope_tol;
  res.large_time_ok = large_sup < cap && large_slope <= slope_tol;
  if (!res.small_time_ok)
    throw std::runtime_error(
        "sde_harnack_profile: small-time growth condition fails (J(s)/s^{2-kappa1} "
        "unbounded as s -> 0; raise kappa1)");
  if (!res.large_time_ok)
    throw std::runtime_error(
        "sde_harnack_profile: large-time growth condition fails (J(s)/s^{2+kappa2} "
        "unbounded as s -> infinity; raise kappa2)");

  const double ce = res.fitted_C * e_norm * e_norm;
  res.log_profile = HarnackProfile::log_profile(kappa1, kappa2, ce, ce, ce);
  res.power_profile =
      HarnackProfile::power_profile(kappa1, kappa2, p * ce / (p - 1.0), p * ce / (p - 1.0),
                                    p * ce / (p - 1.0), p);
  return res;
}

}  // namespace levym
