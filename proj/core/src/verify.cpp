#include "levym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levym/bounds.hpp"
#include "levym/families.hpp"
#include "levym/harnack.hpp"
#include "levym/indices.hpp"
#include "levym/moments.hpp"
#include "levym/montecarlo.hpp"
#include "levym/sde.hpp"
#include "levym/slope.hpp"

namespace levym {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void add_domination(std::vector<CheckResult>& out, const std::string& name, double bound,
                    double oracle, double slack, const std::string& oracle_kind) {
  CheckResult r;
  r.suite = "domination";
  r.name = name;
  if (bound == kInf) {
    // an infinite bound dominates vacuously but flags a modelling slip
    r.pass = oracle == kInf;
    r.margin = r.pass ? 0.0 : -1.0;
    r.detail = "bound=inf oracle=" + fmt(oracle);
    out.push_back(r);
    return;
  }
  r.margin = bound - (oracle - slack);
  r.pass = r.margin >= 0.0;
  r.detail = "bound=" + fmt(bound) + " " + oracle_kind + "=" + fmt(oracle) +
             " slack=" + fmt(slack);
  out.push_back(r);
}

bool family_selected(const VerifyOptions& opts, const std::string& family) {
  return opts.family_filter.empty() || family.find(opts.family_filter) != std::string::npos;
}

// two-sample Kolmogorov-Smirnov p-value (asymptotic)
double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t n = a.size(), m = b.size();
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(double(i) / n - double(j) / m));
  }
  const double en = std::sqrt(double(n) * m / double(n + m));
  const double lam = (en + 0.12 + 0.11 / en) * d;
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    p += 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lam * lam);
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

// --------------------------------------------------------------------------
// domination
// --------------------------------------------------------------------------

std::vector<CheckResult> run_domination_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<double> ts = {0.01, 0.1, 1.0, 10.0, 100.0};
  std::uint64_t cell = 0;

  // ---- stable subordinators ----
  for (double alpha : {0.3, 0.5, 0.8}) {
    const std::string fam = "stable-" + fmt(alpha);
    if (!family_selected(opts, fam)) continue;
    BernsteinFunction phi = stable_bernstein(alpha);
    LevyTriplet trip = subordinator_triplet(phi);
    const double ka = 0.25;  // abs/neg moment order, below every alpha
    const double rho = 0.9 * alpha;
    const double sigma = 0.9 * alpha;
    GrowthWitness w = GrowthWitness::lower_from_grid(phi, rho);
    // the bounded-variation route needs a theta with a finite full moment;
    // power-law measures never have one (inner and outer never both converge)
    const bool bv_applicable = check_hypotheses(phi, 1.0, ka).h3;

    for (double t : ts) {
      const std::string tag = fam + "/t=" + fmt(t);
      const double pos_oracle = stable_subordinator_moment(alpha, ka, t);
      const double pos_slack = 1e-9 * pos_oracle;
      add_domination(out, "abs-small-time/" + tag,
                     bound_abs_moment_small_time(trip, ka, t), pos_oracle, pos_slack,
                     "closed");
      if (bv_applicable) {
        add_domination(out, "abs-bv/" + tag, bound_abs_moment_bv(trip, ka, t), pos_oracle,
                       pos_slack, "closed");
      }
      add_domination(out, "pos-symbol/" + tag,
                     bound_sub_pos_moment_symbol(phi, ka, sigma, t), pos_oracle, pos_slack,
                     "closed");

      const double neg_oracle = stable_subordinator_moment(alpha, -ka, t);
      add_domination(out, "neg/" + tag, bound_sub_neg_moment(ka, w, t), neg_oracle,
                     1e-9 * neg_oracle, "closed");

      if (rho > ka / (1.0 + ka)) {
        const double lambda = 0.1;
        MomentEstimate ex = sub_exp_neg_moment_exact(phi, ka, lambda, t);
        if (ex.finite()) {
          // exponential bounds blow past double range at small t: compare logs
          const double log_bound = bound_sub_exp_neg_moment_log(ka, lambda, w, t);
          const double log_oracle = std::log(ex.value);
          const double log_slack =
              3.0 * ex.abs_error / ex.value + 1e-7;
          CheckResult r;
          r.suite = "domination";
          r.name = "exp-neg/" + tag;
          r.margin = log_bound - (log_oracle - log_slack);
          r.pass = r.margin >= 0.0;
          r.detail = "log bound=" + fmt(log_bound) + " log quadrature=" + fmt(log_oracle);
          out.push_back(r);
        }
      }
      ++cell;
    }
  }

  // ---- Gamma subordinator ----
  if (family_selected(opts, "gamma")) {
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    LevyTriplet trip = subordinator_triplet(phi);
    for (double t : ts) {
      const std::string tag = "gamma/t=" + fmt(t);
      const double g_oracle = gamma_subordinator_moment(1.0, 1.0, 0.5, t);
      add_domination(out, "abs-small-time/" + tag,
                     bound_abs_moment_small_time(trip, 0.5, t), g_oracle, 1e-9 * g_oracle,
                     "closed");
      add_domination(out, "abs-bv/" + tag, bound_abs_moment_bv(trip, 0.5, t), g_oracle,
                     1e-9 * g_oracle, "closed");
      const double q_oracle = gamma_subordinator_moment(1.0, 1.0, 0.25, t);
      add_domination(out, "pos-symbol/" + tag,
                     bound_sub_pos_moment_symbol(phi, 0.25, 0.9, t), q_oracle,
                     1e-9 * q_oracle, "closed");

      // exponential moments: kappa = 1 against the closed mgf
      const double mgf = gamma_subordinator_mgf(1.0, 1.0, 0.25, t);
      add_domination(out, "exp-abs/" + tag, bound_exp_abs_moment(trip, 1.0, 0.25, t), mgf,
                     1e-9 * mgf, "closed");
      add_domination(out, "exp-abs-bv/" + tag,
                     bound_exp_abs_moment_bv(trip, 1.0, 0.25, t), mgf, 1e-9 * mgf,
                     "closed");

      // kappa = 1/2 against Monte Carlo
      SampleBatch batch =
          sample_gamma_process(1.0, 1.0, t, opts.mc_n, split_seed(opts.seed, 1000 + cell));
      EmpiricalMoment em = empirical_moment(
          batch, [](double x) { return std::exp(0.5 * std::sqrt(x)); }, "e^{sqrt(x)/2}");
      add_domination(out, "exp-abs-half/" + tag,
                     bound_exp_abs_moment(trip, 0.5, 0.5, t), em.mean,
                     3.0 * em.std_error, "mc");
      ++cell;
    }
  }

  // ---- compound Poisson atom ----
  if (family_selected(opts, "poisson")) {
    BernsteinFunction phi = poisson_bernstein(1.0, 1.0);
    LevyTriplet trip = subordinator_triplet(phi);
    for (double t : ts) {
      const std::string tag = "poisson/t=" + fmt(t);
      add_domination(out, "abs-small-time/" + tag,
                     bound_abs_moment_small_time(trip, 1.0, t), t, 1e-12 * (1.0 + t),
                     "closed");
      MomentEstimate half = sub_pos_moment_exact(phi, 0.5, t);
      add_domination(out, "abs-bv/" + tag, bound_abs_moment_bv(trip, 0.5, t), half.value,
                     3.0 * half.abs_error + 1e-9 * half.value, "quadrature");
      MomentEstimate quarter = sub_pos_moment_exact(phi, 0.25, t);
      add_domination(out, "pos-symbol/" + tag,
                     bound_sub_pos_moment_symbol(phi, 0.25, 0.9, t), quarter.value,
                     3.0 * quarter.abs_error + 1e-9 * quarter.value, "quadrature");
      const double mgf = poisson_exp_moment(1.0, 1.0, 0.5, 1.0, t);
      add_domination(out, "exp-abs/" + tag, bound_exp_abs_moment(trip, 1.0, 0.5, t), mgf,
                     1e-9 * mgf, "closed");
      add_domination(out, "exp-abs-bv/" + tag, bound_exp_abs_moment_bv(trip, 1.0, 0.5, t),
                     mgf, 1e-9 * mgf, "closed");
      ++cell;
    }
  }

  return out;
}

// --------------------------------------------------------------------------
// sharpness & scaling
// --------------------------------------------------------------------------

std::vector<CheckResult> run_sharpness_suite(const VerifyOptions&) {
  std::vector<CheckResult> out;

  {  // bounded-variation bound against the Gamma closed form at both ends
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    LevyTriplet trip = subordinator_triplet(phi);
    for (double t : {1e-3, 1e3}) {
      const double bound = bound_abs_moment_bv(trip, 0.5, t);
      const double exact = gamma_subordinator_moment(1.0, 1.0, 0.5, t);
      const double ratio = bound / exact;
      CheckResult r;
      r.suite = "sharpness";
      r.name = "gamma-bv-ratio/t=" + fmt(t);
      r.pass = ratio >= 1.0 - 1e-9 && ratio <= 1.05;
      r.margin = std::min(ratio - 1.0 + 1e-9, 1.05 - ratio);
      r.detail = "ratio=" + fmt(ratio);
      out.push_back(r);
    }
  }

  {  // stable negative moment: value and exact t-scaling
    BernsteinFunction phi = stable_bernstein(0.5);
    const double closed = std::tgamma(0.5) / (0.5 * std::tgamma(0.25));
    double worst = 0.0;
    for (double t : {1e-2, 1.0, 1e2}) {
      MomentEstimate m = sub_neg_moment_exact(phi, 0.25, t);
      const double scaled = m.value * std::pow(t, 0.5);
      worst = std::max(worst, std::abs(scaled - closed) / closed);
    }
    CheckResult r;
    r.suite = "sharpness";
    r.name = "stable-neg-scaling";
    r.pass = worst <= 1e-6;
    r.margin = 1e-6 - worst;
    r.detail = "max rel deviation of t^{1/2} E S_t^{-1/4} = " + fmt(worst) +
               ", target " + fmt(closed);
    out.push_back(r);
  }

  {  // symmetric stable: E|X_4|^k = 2 E|X_1|^k for alpha=1.5, k=0.75
    CharacteristicExponent psi = symmetric_stable_symbol(1.5, 1);
    MomentEstimate m1 = levy_abs_moment_exact(psi, 0.75, 1.0);
    MomentEstimate m4 = levy_abs_moment_exact(psi, 0.75, 4.0);
    const double rel = std::abs(m4.value - 2.0 * m1.value) / (2.0 * m1.value);
    CheckResult r;
    r.suite = "sharpness";
    r.name = "symmetric-stable-scaling";
    r.pass = rel <= 1e-4;
    r.margin = 1e-4 - rel;
    r.detail = "E|X_4|^k / (2 E|X_1|^k) - 1 = " + fmt(rel);
    out.push_back(r);
  }

  {  // negative-moment bound with the exact stable witness is tight
    BernsteinFunction phi = stable_bernstein(0.5);
    GrowthWitness w = GrowthWitness::global(1.0, 0.5);
    double worst = 0.0;
    for (double t : {0.1, 1.0, 10.0}) {
      const double bound = bound_sub_neg_moment(0.25, w, t);
      MomentEstimate m = sub_neg_moment_exact(phi, 0.25, t, 1e-12);
      worst = std::max(worst, std::abs(bound - m.value) / m.value);
    }
    CheckResult r;
    r.suite = "sharpness";
    r.name = "stable-neg-tightness";
    r.pass = worst <= 1e-8;
    r.margin = 1e-8 - worst;
    r.detail = "max rel gap bound vs exact = " + fmt(worst);
    out.push_back(r);
  }

  {  // large-t linearity of the small-time split bound
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    LevyTriplet trip = subordinator_triplet(phi);
    double prev = kInf;
    bool monotone = true;
    double last = 0.0;
    for (int i = 0; i <= 12; ++i) {
      const double t = std::pow(10.0, 3.0 * i / 12.0);
      const double ratio = bound_abs_moment_small_time(trip, 0.5, t) / t;
      if (ratio > prev * (1.0 + 1e-9)) monotone = false;
      prev = ratio;
      last = ratio;
    }
    CheckResult r;
    r.suite = "sharpness";
    r.name = "small-time-bound-linear-growth";
    r.pass = monotone && std::isfinite(last);
    r.margin = r.pass ? 1.0 : -1.0;
    r.detail = "bound(t)/t nonincreasing to " + fmt(last) + " on [1,1e3]";
    out.push_back(r);
  }

  {  // exp-negative bound: small-t growth exponent
    const double kappa = 0.25, rho = 0.5, lambda = 0.1;
    GrowthWitness w = GrowthWitness::global(1.0, rho);
    auto logbound = [&](double t) {
      return bound_sub_exp_neg_moment_log(kappa, lambda, w, t);
    };
    // slope of log(bound-exponent) against log(1/t)
    SlopeEstimate se = loglog_slope_window([&](double inv_t) { return logbound(1.0 / inv_t); },
                                           1e2, 1e4, 16);
    const double target = kappa / (rho - (1.0 - rho) * kappa);
    CheckResult r;
    r.suite = "sharpness";
    r.name = "exp-neg-small-t-exponent";
    r.pass = se.slope <= target + 0.05;
    r.margin = target + 0.05 - se.slope;
    r.detail = "slope=" + fmt(se.slope) + " target<=" + fmt(target + 0.05);
    out.push_back(r);
  }

  return out;
}

// --------------------------------------------------------------------------
// exact vs Monte Carlo agreement
// --------------------------------------------------------------------------

std::vector<CheckResult> run_agreement_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::size_t n = opts.agreement_n;
  std::uint64_t row = 0;

  auto check_sigma = [&](const std::string& name, double exact, double exact_err,
                         const EmpiricalMoment& em, double sigmas) {
    CheckResult r;
    r.suite = "agreement";
    r.name = name;
    const double slack = sigmas * em.std_error + exact_err;
    r.margin = slack - std::abs(exact - em.mean);
    r.pass = r.margin >= 0.0;
    r.detail = "exact=" + fmt(exact) + " mc=" + fmt(em.mean) + " se=" + fmt(em.std_error);
    out.push_back(r);
  };
  auto check = [&](const std::string& name, double exact, double exact_err,
                   const EmpiricalMoment& em) {
    check_sigma(name, exact, exact_err, em, 3.0);
  };

  {  // stable subordinator alpha = 0.5 at t = 1
    BernsteinFunction phi = stable_bernstein(0.5);
    SampleBatch batch =
        sample_stable_subordinator(0.5, 1.0, n, split_seed(opts.seed, row++));
    check("stable-pos-kappa=0.25", stable_subordinator_moment(0.5, 0.25, 1.0), 0.0,
          empirical_moment(batch, [](double x) { return std::pow(x, 0.25); }));
    MomentEstimate neg = sub_neg_moment_exact(phi, 0.25, 1.0);
    check("stable-neg-kappa=0.25", neg.value, 3.0 * neg.abs_error,
          empirical_moment(batch, [](double x) { return std::pow(x, -0.25); }));
    MomentEstimate expneg = sub_exp_neg_moment_exact(phi, 0.25, 0.1, 1.0);
    check("stable-exp-neg", expneg.value, 3.0 * expneg.abs_error,
          empirical_moment(batch,
                           [](double x) { return std::exp(0.1 * std::pow(x, -0.25)); }));
    check("stable-laplace", std::exp(-1.0), 0.0,
          empirical_moment(batch, [](double x) { return std::exp(-x); }));
  }

  {  // Gamma subordinator at t = 1
    SampleBatch batch = sample_gamma_process(1.0, 1.0, 1.0, n, split_seed(opts.seed, row++));
    check("gamma-pos-kappa=0.5", gamma_subordinator_moment(1.0, 1.0, 0.5, 1.0), 0.0,
          empirical_moment(batch, [](double x) { return std::sqrt(x); }));
    check("gamma-neg-kappa=0.25", gamma_subordinator_moment(1.0, 1.0, -0.25, 1.0), 0.0,
          empirical_moment(batch, [](double x) { return std::pow(x, -0.25); }));
    check("gamma-mean", 1.0, 0.0, empirical_moment(batch, [](double x) { return x; }));
  }

  {  // symmetric stable alpha = 1.5, d = 1, t in {1, 4}
    CharacteristicExponent psi = symmetric_stable_symbol(1.5, 1);
    for (double t : {1.0, 4.0}) {
      SampleBatch batch =
          sample_subordinate_brownian(1.5, 1, t, n, split_seed(opts.seed, row++));
      MomentEstimate m = levy_abs_moment_exact(psi, 0.75, t);
      check("symmetric-stable-abs/t=" + fmt(t), m.value, 3.0 * m.abs_error,
            empirical_moment(batch,
                             [](double x) { return std::pow(std::abs(x), 0.75); }));
    }
  }

  {  // compound Poisson atom mean
    SampleBatch batch =
        sample_compound_poisson_atom(1.0, 1.0, 1.0, n, split_seed(opts.seed, row++));
    check("poisson-mean", 1.0, 0.0, empirical_moment(batch, [](double x) { return x; }));
  }

  {  // Kanter sampler: Laplace checks across alpha, incl. the near-degenerate
     // end; these guard against gross sampler bias, so they get a 4 se gate
     // (a fixed-seed run of many 3 se checks trips on pure noise)
    for (double alpha : {0.3, 0.8, 0.999}) {
      SampleBatch batch =
          sample_stable_subordinator(alpha, 1.0, n / 4, split_seed(opts.seed, row++));
      check_sigma("kanter-laplace-alpha=" + fmt(alpha), std::exp(-1.0), 0.0,
                  empirical_moment(batch, [](double x) { return std::exp(-x); }), 4.0);
    }
  }

  {  // self-similarity: S_2 vs 2^{1/alpha} S_1 (two-sample KS)
    const double alpha = 0.5;
    SampleBatch a = sample_stable_subordinator(alpha, 2.0, 20000, split_seed(opts.seed, row++));
    SampleBatch b = sample_stable_subordinator(alpha, 1.0, 20000, split_seed(opts.seed, row++));
    for (double& x : b.values) x *= std::pow(2.0, 1.0 / alpha);
    const double p = ks_two_sample_p(a.values, b.values);
    CheckResult r;
    r.suite = "agreement";
    r.name = "kanter-self-similarity";
    r.pass = p > 0.01;
    r.margin = p - 0.01;
    r.detail = "two-sample KS p=" + fmt(p);
    out.push_back(r);
  }

  {  // subordinate BM at alpha=1 is Cauchy: median and central mass
    SampleBatch batch =
        sample_subordinate_brownian(1.0, 1, 1.0, n / 4, split_seed(opts.seed, row++));
    std::vector<double> v = batch.values;
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    const double median = v[v.size() / 2];
    const double med_se = 0.5 * M_PI / std::sqrt(double(v.size()));
    CheckResult r;
    r.suite = "agreement";
    r.name = "cauchy-median";
    r.pass = std::abs(median) <= 3.0 * med_se;
    r.margin = 3.0 * med_se - std::abs(median);
    r.detail = "median=" + fmt(median);
    out.push_back(r);

    std::size_t inside = 0;
    for (double x : batch.values) inside += std::abs(x) <= 1.0;
    const double frac = double(inside) / batch.values.size();
    const double se = std::sqrt(0.25 / batch.values.size());
    CheckResult r2;
    r2.suite = "agreement";
    r2.name = "cauchy-central-mass";
    r2.pass = std::abs(frac - 0.5) <= 3.0 * se;
    r2.margin = 3.0 * se - std::abs(frac - 0.5);
    r2.detail = "P(|X|<=1)=" + fmt(frac);
    out.push_back(r2);
  }

  return out;
}

// --------------------------------------------------------------------------
// indices
// --------------------------------------------------------------------------

std::vector<CheckResult> run_index_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;

  auto near = [](const IndexEstimate& e, double target, double tol) {
    return std::abs(e.value - target) <= tol;
  };

  for (double alpha : {0.3, 0.5, 0.8}) {
    IndexReport rep = estimate_indices(stable_bernstein(alpha));
    const double tol = 0.02;
    const bool ok = near(rep.sigma0, alpha, tol) && near(rep.rho0, alpha, tol) &&
                    near(rep.sigma_inf, alpha, tol) && near(rep.rho_inf, alpha, tol) &&
                    near(rep.beta0, alpha, tol) && near(rep.beta_inf, alpha, tol) &&
                    near(rep.delta0, alpha, tol) && near(rep.delta_inf, alpha, tol);
    double worst = 0.0;
    for (const IndexEstimate* e : {&rep.sigma0, &rep.rho0, &rep.sigma_inf, &rep.rho_inf,
                                   &rep.beta0, &rep.beta_inf, &rep.delta0, &rep.delta_inf})
      worst = std::max(worst, std::abs(e->value - alpha));
    CheckResult r;
    r.suite = "indices";
    r.name = "stable-recovery-alpha=" + fmt(alpha);
    r.pass = ok;
    r.margin = 0.02 - worst;
    r.detail = "max |estimate - alpha| = " + fmt(worst);
    out.push_back(r);
  }

  {  // symmetric stable symbol
    IndexReport rep = estimate_indices(symmetric_stable_symbol(1.5, 1));
    double worst = 0.0;
    for (const IndexEstimate* e : {&rep.beta0, &rep.beta_inf, &rep.delta0, &rep.delta_inf})
      worst = std::max(worst, std::abs(e->value - 1.5));
    CheckResult r;
    r.suite = "indices";
    r.name = "symmetric-stable-recovery";
    r.pass = worst <= 0.02;
    r.margin = 0.02 - worst;
    r.detail = "max |estimate - 1.5| = " + fmt(worst);
    out.push_back(r);
  }

  {  // Gamma limits
    IndexReport rep = estimate_indices(gamma_bernstein(1.0, 1.0));
    const bool ok = std::abs(rep.sigma0.value - 1.0) <= 0.05 &&
                    std::abs(rep.rho0.value - 1.0) <= 0.05 &&
                    std::abs(rep.sigma_inf.value) <= 0.05 &&
                    std::abs(rep.rho_inf.value) <= 0.05;
    CheckResult r;
    r.suite = "indices";
    r.name = "gamma-limits";
    r.pass = ok;
    r.margin = 0.05 - std::max({std::abs(rep.sigma0.value - 1.0),
                                std::abs(rep.rho0.value - 1.0),
                                std::abs(rep.sigma_inf.value),
                                std::abs(rep.rho_inf.value)});
    r.detail = "sigma0=" + fmt(rep.sigma0.value) + " rho_inf=" + fmt(rep.rho_inf.value);
    out.push_back(r);
  }

  {  // randomized draws: ordering invariants, range of beta0, h4 => h2
    std::mt19937_64 rng(split_seed(opts.seed, 777));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int ordering_fail = 0, range_fail = 0, implication_fail = 0;
    double worst_beta0 = 0.0;
    for (int draw = 0; draw < opts.index_draws; ++draw) {
      BernsteinFunction phi = [&]() -> BernsteinFunction {
        const int kind = int(unif(rng) * 5);
        const double a = 0.1 + 0.8 * unif(rng);
        const double c = 0.5 + 1.5 * unif(rng);
        const double b = 0.1 + 1.9 * unif(rng);
        switch (kind) {
          case 0: return stable_bernstein(a, c);
          case 1: return gamma_bernstein(c, 0.5 + 1.5 * unif(rng));
          case 2: return stable_bernstein(a, c) + drift_bernstein(b);
          case 3: return gamma_bernstein(c, 1.0) + stable_bernstein(a, 1.0);
          default:
            return poisson_bernstein(0.5 + 1.5 * unif(rng), 0.5 + 1.5 * unif(rng)) +
                   drift_bernstein(b);
        }
      }();
      IndexReport rep = estimate_indices(phi);
      const double slack = 0.05;
      if (rep.rho_inf.resolved && rep.sigma_inf.resolved &&
          rep.rho_inf.value > rep.sigma_inf.value + slack)
        ++ordering_fail;
      if (rep.sigma0.resolved && rep.rho0.resolved &&
          rep.sigma0.value > rep.rho0.value + slack)
        ++ordering_fail;
      if (rep.delta_inf.resolved && rep.beta_inf.resolved &&
          rep.delta_inf.value > rep.beta_inf.value + slack)
        ++ordering_fail;
      if (rep.beta0.resolved && rep.delta0.resolved &&
          rep.beta0.value > rep.delta0.value + slack)
        ++ordering_fail;
      if (rep.beta0.resolved) {
        worst_beta0 = std::max(worst_beta0, rep.beta0.value);
        if (rep.beta0.value > 2.05) ++range_fail;
      }

      const double kappa1 = 0.5 + 1.5 * unif(rng);
      const double kappa2 = 0.05 + 0.95 * unif(rng);
      HypothesisReport hyp = check_hypotheses(phi, kappa1, kappa2);
      if (hyp.h4 && !hyp.h2) ++implication_fail;
    }
    CheckResult r;
    r.suite = "indices";
    r.name = "randomized-ordering-invariants";
    r.pass = ordering_fail == 0;
    r.margin = ordering_fail == 0 ? 1.0 : -double(ordering_fail);
    r.detail = std::to_string(opts.index_draws) + " draws, " +
               std::to_string(ordering_fail) + " ordering violations";
    out.push_back(r);
    CheckResult r2;
    r2.suite = "indices";
    r2.name = "beta0-range";
    r2.pass = range_fail == 0;
    r2.margin = 2.05 - worst_beta0;
    r2.detail = "max beta0 estimate = " + fmt(worst_beta0);
    out.push_back(r2);
    CheckResult r3;
    r3.suite = "indices";
    r3.name = "h4-implies-h2";
    r3.pass = implication_fail == 0;
    r3.margin = implication_fail == 0 ? 1.0 : -double(implication_fail);
    r3.detail = std::to_string(implication_fail) + " implication violations";
    out.push_back(r3);
  }

  return out;
}

// --------------------------------------------------------------------------
// divergence classifiers
// --------------------------------------------------------------------------

std::vector<CheckResult> run_divergence_suite(const VerifyOptions&) {
  std::vector<CheckResult> out;
  auto expect = [&](const std::string& name, const FinitenessReport& rep,
                    Finiteness want) {
    CheckResult r;
    r.suite = "divergence";
    r.name = name;
    r.pass = rep.decision == want;
    r.margin = r.pass ? 1.0 : -1.0;
    r.detail = rep.reason;
    out.push_back(r);
  };

  {  // Brownian d=1: negative moment of order kappa >= d blows up
    FamilySpec spec;
    spec.family = "brownian";
    spec.d = 1;
    LevyTriplet trip = make_triplet(spec);
    CharacteristicExponent psi = brownian_symbol(1);
    expect("brownian-neg-kappa=1",
           classify_finiteness(trip, psi, {MomentKind::neg, 1.0, 0.0}),
           Finiteness::infinite);
    expect("brownian-exp-neg",
           classify_finiteness(trip, psi, {MomentKind::exp_neg, 0.5, 1.0}),
           Finiteness::infinite);
  }

  {  // any nonzero jump measure with kappa > 1
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    expect("exp-abs-kappa=1.5",
           classify_finiteness(phi, {MomentKind::exp_abs, 1.5, 1.0}),
           Finiteness::infinite);
  }

  {  // Gamma subordinator, exponential negative moment
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    expect("gamma-exp-neg-kappa=0.5",
           classify_finiteness(phi, {MomentKind::exp_neg, 0.5, 1.0}),
           Finiteness::infinite);

    // analytic predicate
    MomentEstimate m = sub_exp_neg_moment_exact(phi, 0.5, 1.0, 1.0);
    CheckResult r;
    r.suite = "divergence";
    r.name = "gamma-exp-neg-analytic-certificate";
    r.pass = m.infinite() && !m.certificate.empty();
    r.margin = r.pass ? 1.0 : -1.0;
    r.detail = m.certificate;
    out.push_back(r);

    // independent numerical certificate with the predicate disabled
    MomentEstimate mn = sub_exp_neg_moment_exact(phi, 0.5, 1.0, 1.0, 1e-9, false);
    CheckResult r2;
    r2.suite = "divergence";
    r2.name = "gamma-exp-neg-numerical-certificate";
    r2.pass = mn.infinite() && !mn.certificate.empty();
    r2.margin = r2.pass ? 1.0 : -1.0;
    r2.detail = mn.certificate;
    out.push_back(r2);
  }

  {  // sanity: the finite sides stay finite
    BernsteinFunction phi = stable_bernstein(0.5);
    expect("stable-exp-neg-below-threshold",
           classify_finiteness(phi, {MomentKind::exp_neg, 0.25, 0.1}),
           Finiteness::finite);
    expect("stable-abs-below-alpha",
           classify_finiteness(phi, {MomentKind::abs, 0.25, 0.0}), Finiteness::finite);
    expect("stable-abs-above-alpha",
           classify_finiteness(phi, {MomentKind::abs, 0.75, 0.0}), Finiteness::infinite);
  }

  return out;
}

// --------------------------------------------------------------------------
// shift-Harnack checks
// --------------------------------------------------------------------------

std::vector<CheckResult> run_harnack_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;

  {  // OU coupling inequality over repeated seeds, log and power forms
    SdeProfileResult prof = sde_harnack_profile([](double) { return 1.0; },
                                                [](double) { return 1.0; }, 0.5, 1.0, 1.0,
                                                2.0, 1.0);
    SdeSpec spec;
    spec.d = 1;
    spec.x0 = {0.0};
    spec.drift = [](double, const double* x, double* l) { l[0] = -x[0]; };
    spec.sigma = [](double) { return 1.0; };
    auto f = [](const double* x) { return 1.0 + std::exp(-x[0] * x[0]); };

    int log_violations = 0, power_violations = 0;
    double min_log_margin = kInf, min_power_margin = kInf;
    for (int s = 0; s < opts.harnack_seeds; ++s) {
      ShiftFunctionals sim =
          simulate_sde_coupling(spec, f, 2.0, {0.5}, 1.0, opts.harnack_paths,
                                opts.harnack_steps, split_seed(opts.seed, 9000 + s));
      HarnackCheck lc = verify_shift_log_harnack(sim, prof.log_exponent);
      HarnackCheck pc = verify_shift_power_harnack(sim, 2.0, prof.power_exponent);
      if (!lc.holds) ++log_violations;
      if (!pc.holds) ++power_violations;
      min_log_margin = std::min(min_log_margin, lc.margin);
      min_power_margin = std::min(min_power_margin, pc.margin);
    }
    CheckResult r;
    r.suite = "harnack";
    r.name = "ou-log-inequality";
    r.pass = log_violations == 0;
    r.margin = min_log_margin;
    r.detail = std::to_string(opts.harnack_seeds) + " seeds, " +
               std::to_string(log_violations) + " violations, exponent=" +
               fmt(prof.log_exponent);
    out.push_back(r);
    CheckResult r2;
    r2.suite = "harnack";
    r2.name = "ou-power-inequality";
    r2.pass = power_violations == 0;
    r2.margin = min_power_margin;
    r2.detail = std::to_string(opts.harnack_seeds) + " seeds, " +
                std::to_string(power_violations) + " violations, exponent=" +
                fmt(prof.power_exponent);
    out.push_back(r2);
  }

  {  // route consistency: exact-moment route never exceeds the bound route
    BernsteinFunction phi = stable_bernstein(0.8);
    HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 1.0);
    double min_gap = kInf;
    bool all_ok = true;
    for (double t : {0.1, 1.0, 10.0}) {
      for (LogHarnackCase c : {LogHarnackCase::a, LogHarnackCase::auto_select}) {
        SubordinateExponent se = subordinate_log_harnack(prof, phi, t, c);
        if (!se.exact_value) {
          all_ok = false;
          continue;
        }
        min_gap = std::min(min_gap, se.value - *se.exact_value);
        if (*se.exact_value > se.value) all_ok = false;
      }
    }
    CheckResult r;
    r.suite = "harnack";
    r.name = "exact-route-below-bound-route";
    r.pass = all_ok && min_gap >= 0.0;
    r.margin = min_gap;
    r.detail = "min (bound - exact) = " + fmt(min_gap);
    out.push_back(r);
  }

  {  // structure: composed exponent dips then grows across t = 1
    BernsteinFunction phi = stable_bernstein(0.8);
    HarnackProfile prof = HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 0.0);
    bool ok = true;
    double prev = kInf;
    for (int i = 0; i <= 8; ++i) {
      const double t = std::pow(10.0, -2.0 + 2.0 * i / 8.0);  // (0,1]
      const double v = subordinate_log_harnack(prof, phi, t, LogHarnackCase::a).value;
      if (v > prev * (1.0 + 1e-9)) ok = false;
      prev = v;
    }
    prev = 0.0;
    for (int i = 0; i <= 8; ++i) {
      const double t = std::pow(10.0, 2.0 * i / 8.0);  // [1,100]
      const double v = subordinate_log_harnack(prof, phi, t, LogHarnackCase::a).value;
      if (v < prev * (1.0 - 1e-9)) ok = false;
      prev = v;
    }
    CheckResult r;
    r.suite = "harnack";
    r.name = "composed-exponent-structure";
    r.pass = ok;
    r.margin = ok ? 1.0 : -1.0;
    r.detail = "nonincreasing on (0,1], nondecreasing on [1,inf)";
    out.push_back(r);
  }

  {  // power form: the small-t exponent always exceeds the log-form one
    const double kappa1 = 1.0, rho = 0.72;
    const double power_exp = kappa1 / (rho - (1.0 - rho) * kappa1);
    const double log_exp = kappa1 / rho;
    CheckResult r;
    r.suite = "harnack";
    r.name = "power-exponent-dominates-log";
    r.pass = power_exp > log_exp;
    r.margin = power_exp - log_exp;
    r.detail = fmt(power_exp) + " > " + fmt(log_exp);
    out.push_back(r);
  }

  {  // power composition on a light-tailed subordinator
    BernsteinFunction phi =
        drift_bernstein(1.0) +
        BernsteinFunction(0.0, truncated_stable_measure(1.0, 0.5, 1.0), {},
                          "truncated-stable");
    HarnackProfile prof = HarnackProfile::power_profile(1.0, 0.5, 1.0, 1.0, 1.0, 2.0);
    SubordinateExponent se = subordinate_power_harnack(prof, phi, 2.0, 1.0);
    CheckResult r;
    r.suite = "harnack";
    r.name = "power-composition-light-tails";
    r.pass = std::isfinite(se.value) && se.value > prof.H3;
    r.margin = r.pass ? se.value : -1.0;
    r.detail = "Phi(1) = " + fmt(se.value);
    out.push_back(r);
  }

  {  // no admissible rho for a logarithmic Laplace exponent
    BernsteinFunction phi = gamma_bernstein(1.0, 1.0);
    HarnackProfile prof = HarnackProfile::power_profile(1.0, 0.5, 1.0, 0.0, 0.0, 2.0);
    bool threw = false;
    std::string msg;
    try {
      subordinate_power_harnack(prof, phi, 2.0, 1.0);
    } catch (const std::exception& e) {
      threw = true;
      msg = e.what();
    }
    CheckResult r;
    r.suite = "harnack";
    r.name = "power-rejects-log-growth";
    r.pass = threw && msg.find("rho") != std::string::npos;
    r.margin = r.pass ? 1.0 : -1.0;
    r.detail = msg;
    out.push_back(r);
  }

  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "domination") return run_domination_suite(opts);
  if (name == "sharpness") return run_sharpness_suite(opts);
  if (name == "agreement") return run_agreement_suite(opts);
  if (name == "indices") return run_index_suite(opts);
  if (name == "divergence") return run_divergence_suite(opts);
  if (name == "harnack") return run_harnack_suite(opts);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const char* suite :
         {"sharpness", "divergence", "indices", "domination", "agreement", "harnack"}) {
      std::vector<CheckResult> part = run_suite(suite, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace levym
