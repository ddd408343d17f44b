#include <CLI11.hpp>

#include <ostream>
#include <random>

#include "foliage/blowup.hpp"
#include "foliage/catalogue.hpp"
#include "foliage/cli.hpp"
#include "foliage/error.hpp"

namespace foliage::cli {

namespace {

// Thrown for bad flag values discovered after CLI11 has finished.
struct UsageError : Error {
  using Error::Error;
};

struct Outcome {
  Json body;
  bool negative = false;
};

struct Common {
  std::string params;
  std::size_t arity = 0;
  std::vector<std::string> param_list() const { return split_list(params); }
  std::optional<std::size_t> arity_opt() const { return arity ? std::optional<std::size_t>(arity) : std::nullopt; }
};

KForm read_one_form(const std::string& text, const Common& g, std::optional<std::size_t> arity = std::nullopt) {
  KForm w = parse_form(text, g.param_list(), arity ? arity : g.arity_opt());
  if (w.degree() != 1) throw DomainError("a 1-form is required, got a function");
  return w;
}

KForm need_plane(const KForm& w) {
  if (w.ctx()->arity() != 2) throw DomainError("two variables required");
  return w;
}

Outcome cmd_analyze(const std::string& text, const Common& g) { return {germ_report(read_one_form(text, g))}; }

Outcome cmd_milnor(const std::string& text, const Common& g) {
  KForm w = need_plane(read_one_form(text, g));
  if (w.has_params()) throw ParametersPresent();
  if (!w.is_polynomial()) throw NotPolynomial();
  return {Json{{"milnor", milnor_json(milnor_number(w))}}};
}

Outcome cmd_blowup(const std::string& text, unsigned dim, std::size_t chart, const Common& g) {
  if (dim != 2 && dim != 3) throw UsageError("--dim must be 2 or 3");
  if (chart < 1 || chart > dim) throw UsageError("--chart must be between 1 and " + std::to_string(dim));
  KForm w = read_one_form(text, g, dim);
  StrictTransform st = strict_transform(w, blowup_chart(w.ctx(), chart - 1));
  Json r;
  r["m"] = st.m;
  r["strict_transform"] = st.form.to_string();
  r["divisor"] = w.ctx()->name(st.divisor_var);
  r["divisor_invariant"] = st.divisor_invariant;
  r["nonsingular_input"] = st.nonsingular_input;
  if (dim == 2 && !st.form.has_params()) {
    try {
      DivisorPoints pts = divisor_singular_points(st);
      Json jp = Json::array();
      for (const auto& [t, mult] : pts.points) jp.push_back({{"coord", to_string(t)}, {"multiplicity", mult}});
      r["divisor_points"] = {{"points", jp}, {"complete", pts.complete}};
    } catch (const DomainError& e) {
      r["divisor_points"] = {{"error", e.what()}};
    }
  }
  return {r};
}

Outcome cmd_search(const std::string& text, unsigned order, std::optional<unsigned> margin, bool factor,
                   const Common& g) {
  KForm w = read_one_form(text, g);
  SearchOptions opt;
  opt.margin = margin;
  SeriesSearch s = factor ? integrating_factor_search(w, order, opt) : first_integral_search(w, order, opt);
  return {search_report(s), s.basis.empty()};
}

Assumptions read_assumptions(const std::string& s) {
  Assumptions out;
  for (const auto& n : split_list(s)) {
    if (n != "a" && n != "b" && n != "P" && n != "Q") throw UsageError("--nonzero takes names among a, b, P, Q");
    out.insert(n);
  }
  return out;
}

Outcome cmd_family(const std::string& text, const Common& g, const std::string& nonzero) {
  const Assumptions assumed = read_assumptions(nonzero);
  FamilyResult f = family_extract(need_plane(read_one_form(text, g)));
  if (!f.data) return {Json{{"in_family", false}, {"reason", f.reason}}, true};
  Json r = family_report(*f.data);
  if (!nonzero.empty()) {
    try {
      r["mu"] = milnor_json(mu_table(*f.data, assumed));
    } catch (const DomainError&) {
      r["mu"] = nullptr;
    }
  }
  r["in_family"] = true;
  return {r};
}

// Table lookup next to the intersection-number computation for the same form.
Outcome cmd_mu_table(const std::string& text, const Common& g, const std::string& nonzero) {
  const Assumptions assumed = read_assumptions(nonzero);
  KForm w = need_plane(read_one_form(text, g));
  FamilyResult f = family_extract(w);
  if (!f.data) return {Json{{"in_family", false}, {"reason", f.reason}}, true};
  Json r;
  r["in_family"] = true;
  r["family"] = to_string(f.data->family);
  Milnor table = mu_table(*f.data, assumed);
  r["mu_table"] = milnor_json(table);
  bool negative = false;
  if (!w.has_params() && w.is_polynomial()) {
    Milnor direct = milnor_number(w);
    r["milnor"] = milnor_json(direct);
    r["agree"] = direct == table;
    negative = direct != table;
  }
  return {r, negative};
}

Outcome cmd_chi(const std::string& text) {
  Rat r;
  try {
    r = parse_rat(text);
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'", 1, 1);
  }
  const bool in = chi_contains(r);
  return {Json{{"r", to_string(r)}, {"in_chi", in}}, !in};
}

struct DulacArgs {
  std::string type, p, q, f, g, lambda;
  std::optional<unsigned> seed;
};

Outcome cmd_dulac(const DulacArgs& a) {
  DulacType type;
  try {
    type = parse_dulac_type(a.type);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  DulacComponents c;
  if (a.seed) {
    std::mt19937 rng(*a.seed);
    c = catalogue::random_dulac(type, rng);
  } else {
    Ctx ctx = standard_ctx(2);
    for (const auto& s : split_list(a.p)) c.p.push_back(parse_scalar(s, ctx).as_poly());
    if (!a.q.empty()) c.q = parse_scalar(a.q, ctx).as_poly();
    if (!a.f.empty()) c.f = parse_scalar(a.f, ctx).as_poly();
    if (!a.g.empty()) c.g = parse_scalar(a.g, ctx).as_poly();
    for (const auto& s : split_list(a.lambda)) c.lambda.push_back(parse_scalar(s, ctx));
  }
  DulacForm d = dulac_build(type, c);
  Json r;
  r["type"] = to_string(d.type);
  r["eta"] = d.eta.to_string();
  r["omega"] = d.omega.to_string();
  r["closed"] = is_closed(d.eta);
  const bool integrable = is_integrable(d.omega);
  r["integrable"] = integrable;
  Json comp;
  comp["p"] = Json::array();
  for (const auto& p : c.p) comp["p"].push_back(p.to_string());
  if (c.q) comp["q"] = c.q->to_string();
  if (c.f) comp["f"] = c.f->to_string();
  if (c.g) comp["g"] = c.g->to_string();
  comp["lambda"] = Json::array();
  for (const auto& l : c.lambda) comp["lambda"].push_back(l.to_string());
  r["components"] = comp;
  return {r, !integrable};
}

BudgetPoint read_point(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--point expects K:u,v");
  BudgetPoint p;
  try {
    const long k = std::stol(s.substr(0, colon));
    if (k < 1 || k > 3) throw UsageError("--point chart must be 1, 2 or 3");
    p.chart = static_cast<std::size_t>(k - 1);
    for (const auto& c : split_list(s.substr(colon + 1))) p.coords.push_back(parse_rat(c));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("--point expects K:u,v with rational u, v");
  }
  if (p.coords.size() != 2) throw UsageError("--point expects two coordinates");
  return p;
}

// A 3-variable form is taken as homogeneous; a 2-variable form is homogenized with --nu,
// the new variable placed at --chart.
Outcome cmd_budget(const std::string& text, const std::vector<std::string>& points, unsigned nu, std::size_t chart,
                   const Common& g) {
  KForm w = read_one_form(text, g);
  std::vector<BudgetPoint> pts;
  for (const auto& s : points) pts.push_back(read_point(s));
  std::optional<HomogForm> h;
  if (w.ctx()->arity() == 3) {
    h = HomogForm::make(w);
  } else if (w.ctx()->arity() == 2) {
    if (!nu) throw UsageError("--nu is required for an affine form");
    if (chart < 1 || chart > 3) throw UsageError("--chart must be 1, 2 or 3");
    h = homogenize_affine(w, nu, chart - 1);
  } else {
    throw DomainError("budget: forms on P2 only");
  }
  SingularBudget b = singular_budget_check(*h, pts);
  Json r = budget_report(b);
  r["nu"] = h->nu();
  r["homogeneous"] = h->omega().to_string();
  return {r, !b.satisfied};
}

Outcome cmd_suite(const std::string& name) {
  const auto names = suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw UsageError("unknown suite '" + name + "'");
  auto items = run_suite(name);
  Json r;
  r["suite"] = name;
  r["items"] = Json::array();
  std::size_t failed = 0;
  for (const auto& it : items) {
    Json j{{"name", it.name}, {"passed", it.passed}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    r["items"].push_back(j);
    failed += !it.passed;
  }
  r["passed"] = items.size() - failed;
  r["failed"] = failed;
  return {r, failed > 0};
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << Json{{"error", msg}, {"kind", kind}}.dump() << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of polynomial 1-forms and their foliations", "foliage"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FOLIAGE_VERSION);
  Common g;
  app.add_option("--params", g.params, "comma separated parameter names")->expected(1);
  app.add_option("--arity", g.arity, "number of variables (default: highest index used, at least 2)")
      ->check(CLI::Range(2, 4));

  std::string form, nonzero, suite, chi_r;
  unsigned dim = 2, order = 0, nu = 0;
  std::size_t chart = 1, budget_chart = 3;
  std::optional<unsigned> margin;
  std::vector<std::string> points;
  DulacArgs dargs;
  std::function<Outcome()> action;
  Json echo;

  auto form_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("form", form, "1-form, e.g. \"(x1 - x2^3)*dx1 + x1*x2^2*dx2\"")->required();
    sc->fallthrough();
    return sc;
  };

  auto* analyze = form_cmd("analyze", "initial part, dicriticity, integrability, 1-jet, Milnor number");
  analyze->callback([&] { action = [&] { return cmd_analyze(form, g); }; });

  auto* milnor = form_cmd("milnor", "Milnor number at the origin (two variables)");
  milnor->callback([&] { action = [&] { return cmd_milnor(form, g); }; });

  auto* blowup = form_cmd("blowup", "strict transform in a chart; chart K keeps x_K (counted from 1)");
  blowup->add_option("--dim", dim, "2 or 3")->required();
  blowup->add_option("--chart", chart, "chart index K, 1-based")->required();
  blowup->callback([&] { action = [&] { return cmd_blowup(form, dim, chart, g); }; });

  auto* si = form_cmd("search-integral", "polynomial first integrals up to the given order");
  si->add_option("--order", order, "truncation order N")->required()->check(CLI::Range(1, 40));
  si->add_option("--margin", margin, "solve at N + margin instead of the adaptive order");
  si->callback([&] { action = [&] { return cmd_search(form, order, margin, false, g); }; });

  auto* sf = form_cmd("search-factor", "polynomial integrating factors up to the given order");
  sf->add_option("--order", order, "truncation order N")->required()->check(CLI::Range(1, 40));
  sf->add_option("--margin", margin, "solve at N + margin instead of the adaptive order");
  sf->callback([&] { action = [&] { return cmd_search(form, order, margin, true, g); }; });

  auto* family = form_cmd("family", "normal form coefficients in the Omega1/Omega2 families");
  family->add_option("--nonzero", nonzero, "symbolic coefficients known to be nonzero (a,b,P,Q)");
  family->callback([&] { action = [&] { return cmd_family(form, g, nonzero); }; });

  auto* mu = form_cmd("mu-table", "Milnor number from the family table, checked against the direct computation");
  mu->add_option("--nonzero", nonzero, "symbolic coefficients known to be nonzero (a,b,P,Q)");
  mu->callback([&] { action = [&] { return cmd_mu_table(form, g, nonzero); }; });

  auto* chi = app.add_subcommand("chi", "membership of a rational in the exceptional set χ (exit 1 if absent)");
  chi->add_option("r", chi_r, "rational, e.g. -3/5")->required();
  chi->callback([&] { action = [&] { return cmd_chi(chi_r); }; });

  auto* dulac = app.add_subcommand("dulac", "build a Dulac form of type a..j");
  dulac->add_option("type", dargs.type, "a..j")->required();
  dulac->add_option("--p", dargs.p, "comma separated polynomials p_i in x1, x2");
  dulac->add_option("--q", dargs.q, "polynomial q");
  dulac->add_option("--f", dargs.f, "quadric f (type j)");
  dulac->add_option("--g", dargs.g, "cubic g (type j)");
  dulac->add_option("--lambda", dargs.lambda, "comma separated residues");
  dulac->add_option("--random", dargs.seed, "random admissible components from this seed");
  dulac->fallthrough();
  dulac->callback([&] { action = [&] { return cmd_dulac(dargs); }; });

  auto* budget = form_cmd("budget", "compare listed singular points of a foliation of P2 with ν²-ν+1");
  budget->add_option("--point", points, "K:u,v, a point of chart x_K = 1 (repeatable)");
  budget->add_option("--nu", nu, "degree for an affine input");
  budget->add_option("--chart", budget_chart, "chart of an affine input (default 3)");
  budget->callback([&] { action = [&] { return cmd_budget(form, points, nu, budget_chart, g); }; });

  auto* vs = app.add_subcommand("verify-suite", "run a registered identity suite");
  vs->add_option("name", suite, "suite name or 'all'")->required();
  vs->fallthrough();
  vs->callback([&] { action = [&] { return cmd_suite(suite); }; });

  std::vector<const char*> argv{"foliage"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Json report;
  report["version"] = FOLIAGE_VERSION;
  report["command"] = app.get_subcommands().front()->get_name();
  echo["args"] = args;
  report["input"] = echo;
  try {
    Outcome o = action();
    report["result"] = o.body;
    out << report.dump(2) << '\n';
    return o.negative ? 1 : 0;
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what());
    return 2;
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what());
    return 2;
  } catch (const DomainError& e) {
    report["error"] = e.what();
    out << report.dump(2) << '\n';
    return 1;
  } catch (const Error& e) {
    emit_error(err, "internal", e.what());
    return 1;
  }
}

}  // namespace foliage::cli
