// levym: moments, bounds, growth indices and shift-Harnack exponents for
// Levy processes and subordinators.
//
// Exit codes: 0 success, 1 verification-suite failure, 2 configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "levym/bounds.hpp"
#include "levym/families.hpp"
#include "levym/harnack.hpp"
#include "levym/indices.hpp"
#include "levym/moments.hpp"
#include "levym/montecarlo.hpp"
#include "levym/report_json.hpp"
#include "levym/verify.hpp"

using namespace levym;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::uint64_t seed = 42;
};

struct TGrid {
  double start = 1.0, stop = 1.0;
  int count = 1;
  bool log_scale = true;

  std::vector<double> points() const {
    std::vector<double> out;
    if (count <= 1) {
      out.push_back(start);
      return out;
    }
    for (int i = 0; i < count; ++i) {
      const double f = double(i) / (count - 1);
      out.push_back(log_scale ? start * std::pow(stop / start, f)
                              : start + (stop - start) * f);
    }
    return out;
  }
};

// "start:stop:count:scale", scale in {log, lin}
TGrid parse_grid(const std::string& text) {
  TGrid g;
  std::stringstream ss(text);
  std::string piece;
  std::vector<std::string> parts;
  while (std::getline(ss, piece, ':')) parts.push_back(piece);
  if (parts.size() == 1) {
    g.start = g.stop = std::stod(parts[0]);
    g.count = 1;
    return g;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw CLI::ValidationError("--t-grid", "expected start:stop:count[:log|lin]");
  g.start = std::stod(parts[0]);
  g.stop = std::stod(parts[1]);
  g.count = std::stoi(parts[2]);
  if (parts.size() == 4) {
    if (parts[3] == "log") g.log_scale = true;
    else if (parts[3] == "lin") g.log_scale = false;
    else throw CLI::ValidationError("--t-grid", "scale must be log or lin");
  }
  if (!(g.start > 0.0) || !(g.stop > 0.0) || g.count < 1)
    throw CLI::ValidationError("--t-grid", "grid endpoints must be positive");
  return g;
}

struct FamilyFlags {
  std::string family;
  std::optional<double> alpha, beta, b, eta, y, c, cut, scale;
  int d = 1;

  FamilySpec spec() const {
    FamilySpec s;
    s.family = family;
    s.d = d;
    auto put = [&](const char* key, const std::optional<double>& v) {
      if (v) s.params[key] = *v;
    };
    put("alpha", alpha);
    put("beta", beta);
    put("b", b);
    put("eta", eta);
    put("y", y);
    put("c", c);
    put("cut", cut);
    put("scale", scale);
    return s;
  }
};

void add_family_flags(CLI::App* cmd, FamilyFlags* ff) {
  cmd->add_option("--family", ff->family, "family name (stable-subordinator, gamma, drift, "
                                          "poisson, truncated-stable, brownian, symmetric-stable)")
      ->required();
  cmd->add_option("--alpha", ff->alpha, "stability / shape parameter");
  cmd->add_option("--beta", ff->beta, "rate parameter");
  cmd->add_option("--b", ff->b, "drift");
  cmd->add_option("--eta", ff->eta, "jump intensity");
  cmd->add_option("--y", ff->y, "atom location");
  cmd->add_option("--c", ff->c, "scale of the Laplace exponent");
  cmd->add_option("--cut", ff->cut, "truncation radius");
  cmd->add_option("--scale", ff->scale, "Gaussian scale");
  cmd->add_option("--d", ff->d, "dimension");
}

void emit(const GlobalOpts& g, const std::string& type, const json& data,
          const std::vector<std::string>& csv_header,
          const std::vector<std::vector<std::string>>& csv_rows) {
  if (g.format == "json") {
    std::cout << report_envelope(type, data).dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < csv_header.size(); ++i)
    std::cout << csv_header[i] << (i + 1 < csv_header.size() ? "," : "\n");
  for (const auto& row : csv_rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
}

std::string num(double x) {
  if (x == kInf) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------------------

int cmd_indices(const GlobalOpts& g, const FamilyFlags& ff) {
  FamilySpec spec = ff.spec();
  IndexReport rep = is_subordinator_family(spec.family)
                        ? estimate_indices(make_bernstein(spec))
                        : estimate_indices(make_symbol(spec));
  json data = rep;
  std::vector<std::string> header = {"index", "value", "residual", "resolved"};
  std::vector<std::vector<std::string>> rows;
  auto push = [&](const char* name, const IndexEstimate& e) {
    rows.push_back({name, num(e.value), num(e.residual), e.resolved ? "1" : "0"});
  };
  if (rep.has_subordinator_indices) {
    push("sigma0", rep.sigma0);
    push("rho0", rep.rho0);
    push("rho_inf", rep.rho_inf);
    push("sigma_inf", rep.sigma_inf);
  }
  push("beta0", rep.beta0);
  push("beta_inf", rep.beta_inf);
  push("delta0", rep.delta0);
  push("delta_inf", rep.delta_inf);
  emit(g, "index-report", data, header, rows);
  return 0;
}

struct MomentArgs {
  FamilyFlags ff;
  double kappa = 0.5;
  std::optional<double> lambda;
  std::string grid_text = "1";
  bool exact = false, mc = false;
  std::string bound_name;
  std::size_t n = 100000;
  std::optional<double> rho, sigma;
  std::string samples_out;  // Monte Carlo batch export (one value per line)
};

void dump_batch(const SampleBatch& batch, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << "# family=" << batch.family << " seed=" << batch.seed << " t=" << batch.t
      << " n=" << batch.values.size() << "\n";
  out.precision(17);
  for (double v : batch.values) out << v << "\n";
}

int cmd_moment(const GlobalOpts& g, const MomentArgs& a) {
  FamilySpec spec = a.ff.spec();
  TGrid grid = parse_grid(a.grid_text);
  json rows_json = json::array();
  std::vector<std::vector<std::string>> rows;

  const bool exp_kind = a.lambda.has_value();
  const bool negative = a.kappa < 0.0;
  const double kap = std::abs(a.kappa);

  for (double t : grid.points()) {
    MomentEstimate m;
    if (a.mc) {
      SampleBatch batch = [&] {
        if (spec.family == "gamma")
          return sample_gamma_process(spec.require("alpha"), spec.require("beta"), t, a.n,
                                      g.seed);
        if (spec.family == "poisson")
          return sample_compound_poisson_atom(spec.require("eta"), spec.get("y", 1.0), t,
                                              a.n, g.seed);
        if (spec.family == "symmetric-stable")
          return sample_subordinate_brownian(spec.require("alpha"), spec.d, t, a.n, g.seed);
        return sample_stable_subordinator(spec.require("alpha"), t, a.n, g.seed);
      }();
      EmpiricalMoment em = empirical_moment(batch, [&](double x) {
        const double v = std::pow(std::abs(x), negative ? -kap : kap);
        return exp_kind ? std::exp(*a.lambda * v) : v;
      });
      m.value = em.mean;
      m.abs_error = em.std_error;
      m.method = MomentMethod::monte_carlo;
      if (!a.samples_out.empty()) dump_batch(batch, a.samples_out);
    } else if (!a.bound_name.empty()) {
      if (!is_subordinator_family(spec.family))
        throw CLI::ValidationError("--bound", "bound evaluation expects a subordinator family");
      BernsteinFunction phi = make_bernstein(spec);
      LevyTriplet trip = subordinator_triplet(phi);
      IndexReport idx = estimate_indices(phi);
      m.method = MomentMethod::bound;
      if (a.bound_name == "abs-small-time") {
        m.value = bound_abs_moment_small_time(trip, kap, t);
      } else if (a.bound_name == "abs-bv") {
        m.value = bound_abs_moment_bv(trip, kap, t);
      } else if (a.bound_name == "pos-symbol") {
        m.value = bound_sub_pos_moment_symbol(
            phi, kap, a.sigma.value_or(0.9 * idx.sigma0.value), t);
      } else if (a.bound_name == "neg") {
        GrowthWitness w = GrowthWitness::lower_from_grid(
            phi, a.rho.value_or(0.9 * idx.rho_inf.value));
        m.value = bound_sub_neg_moment(kap, w, t);
      } else if (a.bound_name == "exp-neg") {
        GrowthWitness w = GrowthWitness::lower_from_grid(
            phi, a.rho.value_or(0.9 * idx.rho_inf.value));
        m.value = bound_sub_exp_neg_moment(kap, a.lambda.value_or(1.0), w, t);
      } else if (a.bound_name == "exp-abs") {
        m.value = bound_exp_abs_moment(trip, kap, a.lambda.value_or(1.0), t);
      } else if (a.bound_name == "exp-abs-bv") {
        m.value = bound_exp_abs_moment_bv(trip, kap, a.lambda.value_or(1.0), t);
      } else if (a.bound_name == "exp-pos-nobig") {
        m.value = bound_sub_exp_pos_no_big_jumps(phi, a.lambda.value_or(1.0), t);
      } else {
        throw CLI::ValidationError("--bound", "unknown bound '" + a.bound_name + "'");
      }
    } else {  // exact
      if (is_subordinator_family(spec.family)) {
        BernsteinFunction phi = make_bernstein(spec);
        if (exp_kind && negative)
          m = sub_exp_neg_moment_exact(phi, kap, *a.lambda, t);
        else if (negative)
          m = sub_neg_moment_exact(phi, kap, t);
        else if (!exp_kind)
          m = sub_pos_moment_exact(phi, kap, t);
        else
          throw CLI::ValidationError("--lambda",
                                     "exact exponential positive moments are not exposed; "
                                     "use --bound or --mc");
      } else {
        CharacteristicExponent psi = make_symbol(spec);
        if (negative)
          m = levy_neg_moment_upper(psi, kap, t);
        else
          m = levy_abs_moment_exact(psi, kap, t);
      }
    }
    json row = m;
    row["t"] = t;
    rows_json.push_back(row);
    const char* method = a.mc ? "monte-carlo"
                              : (!a.bound_name.empty() ? "bound" : "exact");
    rows.push_back({num(t), num(m.value), num(m.abs_error), method});
  }
  emit(g, "moment-table", rows_json, {"t", "value", "error", "method"}, rows);
  return 0;
}

int cmd_harnack(const GlobalOpts& g, const std::string& mode, const std::string& phi_spec,
                double kappa1, double kappa2, const std::vector<double>& C,
                const std::vector<double>& H, double p, double r,
                const std::string& case_name, const std::string& grid_text,
                std::optional<double> rho, std::optional<double> sigma,
                const std::string& gamma_spec, const std::string& k_spec, double e_norm) {
  TGrid grid = parse_grid(grid_text);

  if (mode == "sde") {
    auto parse_fn = [](const std::string& text,
                       bool is_gamma) -> std::function<double(double)> {
      const auto colon = text.find(':');
      const std::string kind = text.substr(0, colon);
      const double par =
          colon == std::string::npos ? 1.0 : std::stod(text.substr(colon + 1));
      if (kind == "const") return [par](double) { return par; };
      if (kind == "power") return [par](double s) { return std::pow(s, par); };
      if (kind == "powercap")  // s^theta and 1
        return [par](double s) { return std::min(std::pow(s, par), 1.0); };
      if (kind == "logmax")  // 1 or log s
        return [](double s) { return std::max(1.0, std::log(s)); };
      throw CLI::ValidationError(is_gamma ? "--gamma" : "--K",
                                 "expected const:v, power:theta, powercap:theta or logmax");
    };
    auto gamma_fn = parse_fn(gamma_spec, true);
    auto k_fn = parse_fn(k_spec, false);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv;
    for (double t : grid.points()) {
      SdeProfileResult res =
          sde_harnack_profile(gamma_fn, k_fn, e_norm, kappa1, kappa2, p, t);
      json row = {{"t", t},
                  {"I", number_to_json(res.I)},
                  {"log_exponent", number_to_json(res.log_exponent)},
                  {"power_exponent", number_to_json(res.power_exponent)},
                  {"fitted_C", number_to_json(res.fitted_C)}};
      rows.push_back(row);
      csv.push_back({num(t), num(res.I), num(res.log_exponent), num(res.power_exponent),
                     num(res.fitted_C)});
    }
    emit(g, "sde-harnack-profile", rows,
         {"t", "I", "log_exponent", "power_exponent", "fitted_C"}, csv);
    return 0;
  }

  BernsteinFunction phi = make_bernstein(parse_family_spec(phi_spec));
  json rows = json::array();
  std::vector<std::vector<std::string>> csv;
  for (double t : grid.points()) {
    SubordinateExponent se;
    if (mode == "log") {
      if (C.size() != 3)
        throw CLI::ValidationError("--C", "expected three constants c1,c2,c3");
      HarnackProfile prof = HarnackProfile::log_profile(kappa1, kappa2, C[0], C[1], C[2]);
      LogHarnackCase which = LogHarnackCase::auto_select;
      if (case_name == "a") which = LogHarnackCase::a;
      else if (case_name == "b") which = LogHarnackCase::b;
      else if (case_name == "c") which = LogHarnackCase::c;
      else if (case_name != "auto")
        throw CLI::ValidationError("--case", "expected a, b, c or auto");
      se = subordinate_log_harnack(prof, phi, t, which, rho, sigma);
    } else if (mode == "power") {
      if (H.size() != 3)
        throw CLI::ValidationError("--H", "expected three constants h1,h2,h3");
      HarnackProfile prof =
          HarnackProfile::power_profile(kappa1, kappa2, H[0], H[1], H[2], p);
      se = subordinate_power_harnack(prof, phi, r, t, rho);
    } else {
      throw CLI::ValidationError("mode", "expected log, power or sde");
    }
    json row = se;
    row["t"] = t;
    rows.push_back(row);
    csv.push_back({num(t), num(se.value),
                   se.exact_value ? num(*se.exact_value) : "n/a",
                   std::string(1, se.case_used)});
  }
  emit(g, "subordinate-exponent", rows, {"t", "value", "exact_value", "case"}, csv);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const VerifyOptions& vo) {
  std::vector<CheckResult> rows = run_suite(suite, vo);
  std::size_t failures = 0;
  if (g.format == "json") {
    json arr = json::array();
    for (const CheckResult& r : rows) {
      arr.push_back({{"suite", r.suite},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"margin", number_to_json(r.margin)},
                     {"detail", r.detail}});
      failures += !r.pass;
    }
    json data = {{"checks", arr}, {"failures", failures}};
    std::cout << report_envelope("verify-report", data).dump(2) << "\n";
  } else {
    std::cout << "suite,name,pass,margin,detail\n";
    for (const CheckResult& r : rows) {
      failures += !r.pass;
      std::cout << r.suite << "," << r.name << "," << (r.pass ? "1" : "0") << ","
                << num(r.margin) << ",\"" << r.detail << "\"\n";
    }
  }
  std::cerr << rows.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_table(const GlobalOpts& g, const FamilyFlags& ff, double kappa,
              const std::string& grid_text, std::size_t n) {
  FamilySpec spec = ff.spec();
  if (!is_subordinator_family(spec.family))
    throw CLI::ValidationError("--family", "table expects a subordinator family");
  BernsteinFunction phi = make_bernstein(spec);
  LevyTriplet trip = subordinator_triplet(phi);
  IndexReport idx = estimate_indices(phi);
  TGrid grid = parse_grid(grid_text);

  json rows_json = json::array();
  std::vector<std::vector<std::string>> rows;
  std::uint64_t cell = 0;
  for (double t : grid.points()) {
    MomentEstimate exact = kappa >= 0.0 ? sub_pos_moment_exact(phi, kappa, t)
                                        : sub_neg_moment_exact(phi, -kappa, t);
    double small_time = kInf, bv = kInf, symbol = kInf;
    if (kappa > 0.0) {
      small_time = bound_abs_moment_small_time(trip, kappa, t);
      bv = bound_abs_moment_bv(trip, kappa, t);
      const double sigma = 0.9 * idx.sigma0.value;
      if (kappa < sigma) symbol = bound_sub_pos_moment_symbol(phi, kappa, sigma, t);
    } else if (idx.rho_inf.value >= 0.05) {
      GrowthWitness w = GrowthWitness::lower_from_grid(phi, 0.9 * idx.rho_inf.value);
      symbol = bound_sub_neg_moment(-kappa, w, t);
    }
    SampleBatch batch = [&] {
      if (spec.family == "gamma")
        return sample_gamma_process(spec.require("alpha"), spec.require("beta"), t, n,
                                    split_seed(g.seed, cell));
      if (spec.family == "poisson")
        return sample_compound_poisson_atom(spec.require("eta"), spec.get("y", 1.0), t, n,
                                            split_seed(g.seed, cell));
      return sample_stable_subordinator(spec.require("alpha"), t, n,
                                        split_seed(g.seed, cell));
    }();
    ++cell;
    EmpiricalMoment em = empirical_moment(
        batch, [&](double x) { return std::pow(x, kappa); });
    json row = {{"t", t},
                {"exact", number_to_json(exact.value)},
                {"mc", number_to_json(em.mean)},
                {"mc_se", em.std_error},
                {"bound_small_time", number_to_json(small_time)},
                {"bound_bv", number_to_json(bv)},
                {"bound_symbol", number_to_json(symbol)}};
    rows_json.push_back(row);
    rows.push_back({num(t), num(exact.value), num(em.mean), num(em.std_error),
                    num(small_time), num(bv), num(symbol)});
  }
  emit(g, "moment-comparison-table", rows_json,
       {"t", "exact", "mc", "mc_se", "bound_small_time", "bound_bv", "bound_symbol"},
       rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moments, bounds, growth indices and shift-Harnack exponents for Levy "
               "processes and subordinators"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "key=value config file mirroring the long options");

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "RNG seed")->envname("LEVYM_SEED")->capture_default_str();

  // indices
  auto* indices_cmd = app.add_subcommand("indices", "estimate the eight growth indices");
  FamilyFlags idx_ff;
  add_family_flags(indices_cmd, &idx_ff);

  // moment
  auto* moment_cmd = app.add_subcommand("moment", "moments: exact, bound or Monte Carlo");
  MomentArgs ma;
  add_family_flags(moment_cmd, &ma.ff);
  moment_cmd->add_option("--kappa", ma.kappa, "moment order; negative for E S_t^{-|kappa|}")
      ->required();
  moment_cmd->add_option("--lambda", ma.lambda, "exponential moment weight");
  moment_cmd->add_option("--t", ma.grid_text, "time point or grid start:stop:count[:scale]");
  moment_cmd->add_option("--t-grid", ma.grid_text, "alias of --t");
  auto* exact_flag = moment_cmd->add_flag("--exact", ma.exact, "exact quadrature (default)");
  auto* mc_flag = moment_cmd->add_flag("--mc", ma.mc, "Monte Carlo estimate");
  moment_cmd->add_option("--bound", ma.bound_name,
                         "bound name: abs-small-time, abs-bv, pos-symbol, neg, exp-abs, "
                         "exp-abs-bv, exp-neg, exp-pos-nobig");
  moment_cmd->add_option("--n", ma.n, "Monte Carlo sample count");
  moment_cmd->add_option("--rho", ma.rho, "growth-witness exponent at infinity");
  moment_cmd->add_option("--sigma", ma.sigma, "growth-witness exponent at zero");
  moment_cmd->add_option("--samples-out", ma.samples_out,
                         "write the Monte Carlo batch as CSV (one value per line, "
                         "header with family and seed)");
  exact_flag->excludes(mc_flag);

  // bound (alias surface for moment --bound)
  auto* bound_cmd = app.add_subcommand("bound", "evaluate one explicit bound on a grid");
  MomentArgs ba;
  add_family_flags(bound_cmd, &ba.ff);
  bound_cmd->add_option("--name", ba.bound_name, "bound name (see moment --bound)")
      ->required();
  bound_cmd->add_option("--kappa", ba.kappa, "moment order")->required();
  bound_cmd->add_option("--lambda", ba.lambda, "exponential moment weight");
  bound_cmd->add_option("--t", ba.grid_text, "time point or grid");
  bound_cmd->add_option("--t-grid", ba.grid_text, "alias of --t");
  bound_cmd->add_option("--rho", ba.rho, "growth-witness exponent at infinity");
  bound_cmd->add_option("--sigma", ba.sigma, "growth-witness exponent at zero");

  // harnack
  auto* harnack_cmd = app.add_subcommand("harnack", "compose shift-Harnack exponents");
  std::string h_mode, h_phi = "stable:0.5", h_case = "auto", h_grid = "1";
  std::string h_gamma = "const:1", h_K = "const:1";
  double h_k1 = 1.0, h_k2 = 0.5, h_p = 2.0, h_r = 2.0, h_e = 0.5;
  std::vector<double> h_C, h_H;
  std::optional<double> h_rho, h_sigma;
  harnack_cmd->add_option("mode", h_mode, "log | power | sde")->required();
  harnack_cmd->add_option("--phi", h_phi, "subordinator spec, e.g. stable:0.5 or gamma:1,1");
  harnack_cmd->add_option("--kappa1", h_k1, "small-time exponent");
  harnack_cmd->add_option("--kappa2", h_k2, "large-time exponent");
  harnack_cmd->add_option("--C", h_C, "log-profile constants c1,c2,c3")->delimiter(',');
  harnack_cmd->add_option("--H", h_H, "power-profile constants h1,h2,h3")->delimiter(',');
  harnack_cmd->add_option("--p", h_p, "power");
  harnack_cmd->add_option("--r", h_r, "Hoelder split parameter");
  harnack_cmd->add_option("--case", h_case, "log case: a, b, c or auto");
  harnack_cmd->add_option("--t", h_grid, "time point or grid");
  harnack_cmd->add_option("--t-grid", h_grid, "alias of --t");
  harnack_cmd->add_option("--rho", h_rho, "witness exponent at infinity");
  harnack_cmd->add_option("--sigma", h_sigma, "witness exponent at zero");
  harnack_cmd->add_option("--gamma", h_gamma, "sde: inverse-dispersion bound gamma(s)");
  harnack_cmd->add_option("--K", h_K, "sde: drift Lipschitz bound K(s)");
  harnack_cmd->add_option("--e-norm", h_e, "sde: |e|");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string v_suite = "all";
  VerifyOptions vo;
  verify_cmd->add_option("--suite", v_suite,
                         "domination | sharpness | agreement | indices | divergence | "
                         "harnack | all");
  verify_cmd->add_option("--n", vo.mc_n, "Monte Carlo samples per domination cell");
  verify_cmd->add_option("--agreement-n", vo.agreement_n, "samples for exact-vs-MC rows");
  verify_cmd->add_option("--paths", vo.harnack_paths, "SDE paths per seed");
  verify_cmd->add_option("--harnack-seeds", vo.harnack_seeds, "seed repetitions");
  verify_cmd->add_option("--steps", vo.harnack_steps, "Euler-Maruyama steps");
  verify_cmd->add_option("--draws", vo.index_draws, "randomized index draws");
  verify_cmd->add_option("--family", vo.family_filter, "restrict domination to one family");

  // table
  auto* table_cmd = app.add_subcommand("table", "exact / bound / MC comparison table");
  FamilyFlags t_ff;
  add_family_flags(table_cmd, &t_ff);
  double t_kappa = 0.5;
  std::string t_grid = "1e-2:1e2:9:log";
  std::size_t t_n = 100000;
  table_cmd->add_option("--kappa", t_kappa, "moment order (signed)")->required();
  table_cmd->add_option("--t-grid", t_grid, "time grid");
  table_cmd->add_option("--n", t_n, "Monte Carlo sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  try {
    if (indices_cmd->parsed()) return cmd_indices(g, idx_ff);
    if (moment_cmd->parsed()) return cmd_moment(g, ma);
    if (bound_cmd->parsed()) return cmd_moment(g, ba);
    if (harnack_cmd->parsed())
      return cmd_harnack(g, h_mode, h_phi, h_k1, h_k2, h_C, h_H, h_p, h_r, h_case, h_grid,
                         h_rho, h_sigma, h_gamma, h_K, h_e);
    if (verify_cmd->parsed()) {
      vo.seed = g.seed;
      return cmd_verify(g, v_suite, vo);
    }
    if (table_cmd->parsed()) return cmd_table(g, t_ff, t_kappa, t_grid, t_n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
