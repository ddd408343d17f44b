#include "foliage/cli.hpp"
#include "foliage/error.hpp"

namespace foliage::cli {

Json milnor_json(const Milnor& m) { return m ? Json(*m) : Json("INFINITE"); }

namespace {

Json rat_json(const Rat& r) { return to_string(r); }

bool polynomial_free_of_params(const KForm& w) { return w.is_polynomial() && !w.has_params(); }

}  // namespace

Json germ_report(const KForm& w) {
  if (w.degree() != 1) throw DomainError("analyze: 1-form expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.is_zero()) throw DomainError("analyze: zero form");
  Json r;
  auto [nu, initial] = initial_part(w);
  r["nu"] = nu;
  r["initial"] = initial.to_string();
  r["dicritical"] = is_dicritical(initial);
  r["integrable"] = is_integrable(w);
  const std::size_t n = w.ctx()->arity();
  r["singular"] = nu > 0;
  if (n <= 3) {
    JetClass j = one_jet_class(w);
    r["jet"] = to_string(j.tag);
    r["kupka"] = j.kupka;
  }
  if (n == 3) {
    try {
      QuadCase q = prop24_case(w);
      Json jq;
      jq["case"] = to_string(q.tag);
      if (q.q) jq["q"] = q.q->to_string();
      if (q.tag == QuadTag::Rank1) jq["delta"] = rat_json(q.delta);
      r["quad"] = jq;
    } catch (const DomainError&) {
      r["quad"] = nullptr;
    }
  }
  if (n == 2 && polynomial_free_of_params(w)) r["milnor"] = milnor_json(milnor_number(w));
  return r;
}

Json search_report(const SeriesSearch& s) {
  Json r;
  r["order"] = s.order;
  r["solved_order"] = s.solved_order;
  r["basis"] = Json::array();
  for (const auto& p : s.basis) r["basis"].push_back(p.to_string());
  r["obstruction_degree"] = s.obstruction_degree ? Json(*s.obstruction_degree) : Json(nullptr);
  r["exclusions"] = Json::array();
  for (const auto& p : s.exclusions) r["exclusions"].push_back(p.to_string());
  r["certifies_formal"] = s.certifies_formal;
  if (!s.shapes.empty()) {
    r["shapes"] = Json::array();
    for (const auto& sh : s.shapes) {
      Json j;
      j["k"] = sh.k;
      j["l"] = sh.l ? Json(*sh.l) : Json(nullptr);
      j["dg_dx1_at_0"] = sh.dg_dx1_at_0.to_string();
      r["shapes"].push_back(j);
    }
  }
  return r;
}

Json family_report(const OmegaFamilyData& d) {
  Json r;
  r["family"] = to_string(d.family);
  r["alpha"] = d.alpha.to_string();
  r["beta"] = d.beta.to_string();
  r["a"] = d.a.to_string();
  r["b"] = d.b.to_string();
  r["P"] = d.P.to_string();
  r["Q"] = d.Q.to_string();
  r["gamma"] = rat_json(d.gamma);
  r["R"] = rat_json(d.R);
  r["t"] = d.t.to_string();
  r["k"] = d.k.to_string();
  if (d.b.is_constant()) r["b_in_chi"] = chi_contains(d.b.num().constant_term());
  try {
    r["mu"] = milnor_json(mu_table(d));
  } catch (const DomainError&) {
    r["mu"] = nullptr;
  }
  return r;
}

Json budget_report(const SingularBudget& b) {
  Json r;
  r["points"] = Json::array();
  for (const auto& p : b.points) {
    Json j;
    j["chart"] = p.chart + 1;  // x_chart = 1, counted from 1
    j["coords"] = Json::array();
    for (const auto& c : p.coords) j["coords"].push_back(rat_json(c));
    j["mu"] = p.mu;
    r["points"].push_back(j);
  }
  r["total"] = b.total;
  r["expected"] = b.expected;
  r["satisfied"] = b.satisfied;
  return r;
}

}  // namespace foliage::cli
