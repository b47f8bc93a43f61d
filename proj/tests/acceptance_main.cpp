// Acceptance suite: every release criterion with pinned tolerances, one
// pass/fail line per criterion. Exit code 0 iff all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "levym/bounds.hpp"
#include "levym/families.hpp"
#include "levym/moments.hpp"
#include "levym/montecarlo.hpp"
#include "levym/verify.hpp"

using namespace levym;

namespace {

struct Criterion {
  std::string name;
  double runtime_limit_s = 0.0;
  std::function<bool(std::string*)> run;
};

bool suite_clean(const std::vector<CheckResult>& rows, std::string* detail,
                 double* min_margin = nullptr) {
  int failures = 0;
  double worst = kInf;
  std::string first;
  for (const CheckResult& r : rows) {
    worst = std::min(worst, r.margin);
    if (!r.pass) {
      ++failures;
      if (first.empty()) first = r.name + " (" + r.detail + ")";
    }
  }
  if (min_margin) *min_margin = worst;
  *detail = std::to_string(rows.size()) + " checks, " + std::to_string(failures) +
            " failures" + (first.empty() ? "" : ", first: " + first);
  return failures == 0;
}

bool rows_clean(const std::vector<CheckResult>& rows, const std::string& prefix,
                std::string* detail) {
  int found = 0, failures = 0;
  std::string first;
  for (const CheckResult& r : rows) {
    if (r.name.rfind(prefix, 0) != 0) continue;
    ++found;
    if (!r.pass && first.empty()) first = r.detail;
    failures += !r.pass;
  }
  *detail = prefix + ": " + std::to_string(found) + " rows, " +
            std::to_string(failures) + " failures" + (first.empty() ? "" : "; " + first);
  return found > 0 && failures == 0;
}

}  // namespace

int main() {
  VerifyOptions opts;  // acceptance-scale parameters
  opts.mc_n = 100000;
  opts.agreement_n = 1000000;
  opts.harnack_paths = 100000;
  opts.harnack_seeds = 20;
  opts.harnack_steps = 2048;
  opts.index_draws = 100;
  opts.seed = 42;

  std::vector<Criterion> criteria;

  criteria.push_back({"1 gamma bounded-variation sharpness at both horizons", 1.0,
                      [&](std::string* detail) {
                        LevyTriplet trip = subordinator_triplet(gamma_bernstein(1.0, 1.0));
                        bool ok = true;
                        for (double t : {1e-3, 1e3}) {
                          const double ratio = bound_abs_moment_bv(trip, 0.5, t) /
                                               gamma_subordinator_moment(1.0, 1.0, 0.5, t);
                          ok = ok && ratio >= 1.0 - 1e-9 && ratio <= 1.05;
                          *detail += "ratio(" + std::to_string(t) + ")=" +
                                     std::to_string(ratio) + " ";
                        }
                        return ok;
                      }});

  criteria.push_back(
      {"2 stable negative-moment scaling constant to 1e-6", 1.0,
       [&](std::string* detail) {
         BernsteinFunction phi = stable_bernstein(0.5);
         const double target = std::tgamma(0.5) / (0.5 * std::tgamma(0.25));
         double worst = 0.0;
         for (double t : {1e-2, 1.0, 1e2}) {
           const double v = sub_neg_moment_exact(phi, 0.25, t).value * std::pow(t, 0.5);
           worst = std::max(worst, std::abs(v - target) / target);
         }
         *detail = "max relative deviation " + std::to_string(worst) + " from " +
                   std::to_string(target);
         return worst <= 1e-6;
       }});

  criteria.push_back(
      {"3 symmetric-stable time scaling, quadrature and Monte Carlo", 60.0,
       [&](std::string* detail) {
         CharacteristicExponent psi = symmetric_stable_symbol(1.5, 1);
         MomentEstimate m1 = levy_abs_moment_exact(psi, 0.75, 1.0);
         MomentEstimate m4 = levy_abs_moment_exact(psi, 0.75, 4.0);
         const double rel = std::abs(m4.value - 2.0 * m1.value) / (2.0 * m1.value);
         bool ok = rel <= 1e-4;
         *detail = "|ratio-2| rel " + std::to_string(rel);
         for (double t : {1.0, 4.0}) {
           SampleBatch batch = sample_subordinate_brownian(
               1.5, 1, t, 1000000, static_cast<std::uint64_t>(42 + t));
           EmpiricalMoment em = empirical_moment(
               batch, [](double x) { return std::pow(std::abs(x), 0.75); });
           const MomentEstimate& m = t == 1.0 ? m1 : m4;
           const double gap = std::abs(em.mean - m.value);
           ok = ok && gap <= 3.0 * em.std_error + m.abs_error;
           *detail += ", mc(t=" + std::to_string(int(t)) + ") gap " +
                      std::to_string(gap) + " vs 3se " +
                      std::to_string(3.0 * em.std_error);
         }
         return ok;
       }});

  criteria.push_back({"4 bound domination over the family/time matrix", 300.0,
                      [&](std::string* detail) {
                        return suite_clean(run_domination_suite(opts), detail);
                      }});

  criteria.push_back({"5 divergence classifiers fire on canonical instances", 30.0,
                      [&](std::string* detail) {
                        return suite_clean(run_divergence_suite(opts), detail);
                      }});

  criteria.push_back({"6 index recovery and ordering invariants", 30.0,
                      [&](std::string* detail) {
                        return suite_clean(run_index_suite(opts), detail);
                      }});

  criteria.push_back(
      {"7 exponential negative-moment small-time exponent", 5.0,
       [&](std::string* detail) {
         std::vector<CheckResult> rows = run_sharpness_suite(opts);
         return rows_clean(rows, "exp-neg-small-t-exponent", detail);
       }});

  criteria.push_back({"8 coupling inequality on the OU configuration, 20 seeds", 300.0,
                      [&](std::string* detail) {
                        std::vector<CheckResult> rows = run_harnack_suite(opts);
                        std::string d1, d2;
                        const bool log_ok = rows_clean(rows, "ou-log-inequality", &d1);
                        const bool pow_ok = rows_clean(rows, "ou-power-inequality", &d2);
                        *detail = d1 + "; " + d2;
                        return log_ok && pow_ok;
                      }});

  criteria.push_back({"9 exact-versus-Monte-Carlo agreement at n=1e6", 600.0,
                      [&](std::string* detail) {
                        return suite_clean(run_agreement_suite(opts), detail);
                      }});

  int failures = 0;
  for (Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.runtime_limit_s;
    if (!in_time) {
      detail += " [runtime " + std::to_string(elapsed) + "s exceeds " +
                std::to_string(c.runtime_limit_s) + "s]";
    }
    const bool pass = ok && in_time;
    failures += !pass;
    std::printf("[%s] criterion %s (%.2fs) %s\n", pass ? "PASS" : "FAIL", c.name.c_str(),
                elapsed, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failures\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
