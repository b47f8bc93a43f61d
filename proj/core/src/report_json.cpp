#include "levym/report_json.hpp"

#include <cmath>

namespace levym {

using nlohmann::json;

json number_to_json(double x) {
  if (x == kInf) return json("inf");
  if (x == -kInf) return json("-inf");
  return json(x);
}

double number_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw std::invalid_argument("number_from_json: unexpected string '" + s + "'");
  }
  return j.get<double>();
}

void to_json(json& j, const IndexEstimate& e) {
  j = json{{"value", number_to_json(e.value)},
           {"residual", e.residual},
           {"resolved", e.resolved}};
}

void from_json(const json& j, IndexEstimate& e) {
  e.value = number_from_json(j.at("value"));
  e.residual = j.at("residual").get<double>();
  e.resolved = j.at("resolved").get<bool>();
}

void to_json(json& j, const IndexReport& r) {
  j = json{{"subject", r.subject},
           {"has_subordinator_indices", r.has_subordinator_indices},
           {"beta0", r.beta0},
           {"beta_inf", r.beta_inf},
           {"delta0", r.delta0},
           {"delta_inf", r.delta_inf}};
  if (r.has_subordinator_indices) {
    j["sigma0"] = r.sigma0;
    j["rho0"] = r.rho0;
    j["sigma_inf"] = r.sigma_inf;
    j["rho_inf"] = r.rho_inf;
  }
}

void from_json(const json& j, IndexReport& r) {
  r.subject = j.at("subject").get<std::string>();
  r.has_subordinator_indices = j.at("has_subordinator_indices").get<bool>();
  r.beta0 = j.at("beta0").get<IndexEstimate>();
  r.beta_inf = j.at("beta_inf").get<IndexEstimate>();
  r.delta0 = j.at("delta0").get<IndexEstimate>();
  r.delta_inf = j.at("delta_inf").get<IndexEstimate>();
  if (r.has_subordinator_indices) {
    r.sigma0 = j.at("sigma0").get<IndexEstimate>();
    r.rho0 = j.at("rho0").get<IndexEstimate>();
    r.sigma_inf = j.at("sigma_inf").get<IndexEstimate>();
    r.rho_inf = j.at("rho_inf").get<IndexEstimate>();
  }
}

void to_json(json& j, const HypothesisReport& r) {
  j = json{{"h1", r.h1},
           {"h2", r.h2},
           {"h3", r.h3},
           {"h4", r.h4},
           {"witness_rho", r.witness_rho},
           {"witness_sigma", r.witness_sigma},
           {"liminf_proxy", number_to_json(r.liminf_proxy)},
           {"limsup_proxy", number_to_json(r.limsup_proxy)},
           {"h3_theta", r.h3_theta},
           {"h3_value", number_to_json(r.h3_value)}};
}

void from_json(const json& j, HypothesisReport& r) {
  r.h1 = j.at("h1").get<bool>();
  r.h2 = j.at("h2").get<bool>();
  r.h3 = j.at("h3").get<bool>();
  r.h4 = j.at("h4").get<bool>();
  r.witness_rho = j.at("witness_rho").get<double>();
  r.witness_sigma = j.at("witness_sigma").get<double>();
  r.liminf_proxy = number_from_json(j.at("liminf_proxy"));
  r.limsup_proxy = number_from_json(j.at("limsup_proxy"));
  r.h3_theta = j.at("h3_theta").get<double>();
  r.h3_value = number_from_json(j.at("h3_value"));
}

namespace {
const char* method_name(MomentMethod m) {
  switch (m) {
    case MomentMethod::exact_quadrature: return "exact-quadrature";
    case MomentMethod::closed_form: return "closed-form";
    case MomentMethod::monte_carlo: return "monte-carlo";
    case MomentMethod::bound: return "bound";
  }
  return "exact-quadrature";
}

MomentMethod method_from_name(const std::string& s) {
  if (s == "closed-form") return MomentMethod::closed_form;
  if (s == "monte-carlo") return MomentMethod::monte_carlo;
  if (s == "bound") return MomentMethod::bound;
  return MomentMethod::exact_quadrature;
}
}  // namespace

void to_json(json& j, const MomentEstimate& m) {
  j = json{{"value", number_to_json(m.value)},
           {"abs_error", m.abs_error},
           {"method", method_name(m.method)},
           {"certificate", m.certificate},
           {"undecided", m.undecided}};
}

void from_json(const json& j, MomentEstimate& m) {
  m.value = number_from_json(j.at("value"));
  m.abs_error = j.at("abs_error").get<double>();
  m.method = method_from_name(j.at("method").get<std::string>());
  m.certificate = j.at("certificate").get<std::string>();
  m.undecided = j.at("undecided").get<bool>();
}

void to_json(json& j, const EmpiricalMoment& m) {
  j = json{{"mean", number_to_json(m.mean)},
           {"std_error", m.std_error},
           {"n", m.n},
           {"functional", m.functional},
           {"diverged", m.diverged}};
}

void from_json(const json& j, EmpiricalMoment& m) {
  m.mean = number_from_json(j.at("mean"));
  m.std_error = j.at("std_error").get<double>();
  m.n = j.at("n").get<std::size_t>();
  m.functional = j.at("functional").get<std::string>();
  m.diverged = j.at("diverged").get<bool>();
}

void to_json(json& j, const LedgerEntry& e) {
  j = json{{"name", e.name}, {"value", number_to_json(e.value)}, {"source", e.source}};
}

void from_json(const json& j, LedgerEntry& e) {
  e.name = j.at("name").get<std::string>();
  e.value = number_from_json(j.at("value"));
  e.source = j.at("source").get<std::string>();
}

void to_json(json& j, const SubordinateExponent& s) {
  j = json{{"value", number_to_json(s.value)},
           {"case", std::string(1, s.case_used)},
           {"ledger", s.ledger},
           {"hypotheses", s.hypotheses}};
  if (s.exact_value) j["exact_value"] = number_to_json(*s.exact_value);
}

void from_json(const json& j, SubordinateExponent& s) {
  s.value = number_from_json(j.at("value"));
  s.case_used = j.at("case").get<std::string>()[0];
  s.ledger = j.at("ledger").get<std::vector<LedgerEntry>>();
  s.hypotheses = j.at("hypotheses").get<HypothesisReport>();
  if (j.contains("exact_value")) s.exact_value = number_from_json(j.at("exact_value"));
}

json report_envelope(const std::string& type, json data) {
  return json{{"schema", 1}, {"type", type}, {"data", std::move(data)}};
}

}  // namespace levym
