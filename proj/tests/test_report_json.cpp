#include <doctest.h>

#include "levym/families.hpp"
#include "levym/harnack.hpp"
#include "levym/report_json.hpp"

using namespace levym;
using nlohmann::json;

namespace {
bool same(const IndexEstimate& a, const IndexEstimate& b) {
  return a.value == b.value && a.residual == b.residual && a.resolved == b.resolved;
}
}  // namespace

TEST_CASE("index reports round-trip exactly") {
  IndexReport rep = estimate_indices(stable_bernstein(0.6));
  json j = rep;
  IndexReport back = json::parse(j.dump()).get<IndexReport>();
  CHECK(back.subject == rep.subject);
  CHECK(back.has_subordinator_indices == rep.has_subordinator_indices);
  CHECK(same(back.sigma0, rep.sigma0));
  CHECK(same(back.rho0, rep.rho0));
  CHECK(same(back.sigma_inf, rep.sigma_inf));
  CHECK(same(back.rho_inf, rep.rho_inf));
  CHECK(same(back.beta0, rep.beta0));
  CHECK(same(back.beta_inf, rep.beta_inf));
  CHECK(same(back.delta0, rep.delta0));
  CHECK(same(back.delta_inf, rep.delta_inf));
}

TEST_CASE("infinite values survive the trip") {
  MomentEstimate m;
  m.value = kInf;
  m.certificate = "tail blew the cap";
  m.method = MomentMethod::bound;
  json j = m;
  MomentEstimate back = json::parse(j.dump()).get<MomentEstimate>();
  CHECK(back.value == kInf);
  CHECK(back.certificate == m.certificate);
  CHECK(back.method == MomentMethod::bound);

  IndexEstimate e{kInf, 0.0, true};  // delta0 of a drift-dominated symbol
  json je = e;
  CHECK(json::parse(je.dump()).get<IndexEstimate>().value == kInf);
}

TEST_CASE("hypothesis and exponent reports round-trip") {
  BernsteinFunction phi = stable_bernstein(0.8);
  HypothesisReport hyp = check_hypotheses(phi, 1.0, 0.5);
  json jh = hyp;
  HypothesisReport hback = json::parse(jh.dump()).get<HypothesisReport>();
  CHECK(hback.h1 == hyp.h1);
  CHECK(hback.h2 == hyp.h2);
  CHECK(hback.h3 == hyp.h3);
  CHECK(hback.h4 == hyp.h4);
  CHECK(hback.witness_rho == hyp.witness_rho);
  CHECK(hback.liminf_proxy == hyp.liminf_proxy);

  SubordinateExponent se = subordinate_log_harnack(
      HarnackProfile::log_profile(1.0, 0.5, 1.0, 1.0, 1.0), phi, 1.0);
  json js = se;
  SubordinateExponent sback = json::parse(js.dump()).get<SubordinateExponent>();
  CHECK(sback.value == se.value);
  CHECK(sback.case_used == se.case_used);
  REQUIRE(sback.exact_value.has_value());
  CHECK(*sback.exact_value == *se.exact_value);
  REQUIRE(sback.ledger.size() == se.ledger.size());
  for (std::size_t i = 0; i < se.ledger.size(); ++i) {
    CHECK(sback.ledger[i].name == se.ledger[i].name);
    CHECK(sback.ledger[i].value == se.ledger[i].value);
    CHECK(sback.ledger[i].source == se.ledger[i].source);
  }
}

TEST_CASE("empirical moments and envelopes") {
  EmpiricalMoment em;
  em.mean = 1.25;
  em.std_error = 0.003;
  em.n = 1000;
  em.functional = "x^{1/2}";
  json j = em;
  EmpiricalMoment back = json::parse(j.dump()).get<EmpiricalMoment>();
  CHECK(back.mean == em.mean);
  CHECK(back.std_error == em.std_error);
  CHECK(back.n == em.n);
  CHECK(back.functional == em.functional);

  json env = report_envelope("moment-table", json::array());
  CHECK(env.at("schema") == 1);
  CHECK(env.at("type") == "moment-table");
}
