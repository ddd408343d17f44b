#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "foliage/blowup.hpp"
#include "foliage/catalogue.hpp"
#include "foliage/cli.hpp"
#include "foliage/error.hpp"

namespace foliage::cli {

namespace {

using namespace foliage::catalogue;

struct Collector {
  std::vector<SuiteItem> items;
  void check(const std::string& name, bool ok, const std::string& detail = "") { items.push_back({name, ok, detail}); }
  // Runs f and records failure instead of propagating exceptions.
  void guard(const std::string& name, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      items.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
};

RatFn one(const Ctx& c) { return RatFn(c, 1); }
Poly var(const Ctx& c, std::size_t i) { return Poly::var(c, i); }

bool closed(const KForm& w) { return is_closed(w); }

KForm divide(const KForm& w, const Poly& p) { return RatFn(Poly(p.ctx(), 1), p) * w; }

void suite_euler(Collector& c) {
  for (const auto& nf : homogeneous_corpus()) {
    c.guard(nf.name, [&] {
      const Ctx& ctx = nf.omega.ctx();
      VecField R = radial_field(ctx);
      RatFn scale(ctx, Rat(nf.omega.order() + 1));
      c.check("L_R ω = (ν+1)ω: " + nf.name, lie_derivative(R, nf.omega) == scale * nf.omega);
      c.check("dicritical flag: " + nf.name, is_dicritical(nf.omega) == nf.dicritical);
      if (nf.dicritical)
        c.check("i_R dω = (ν+1)ω: " + nf.name, interior_product(R, exterior_derivative(nf.omega)) == scale * nf.omega);
    });
  }
}

void suite_dulac(Collector& c) {
  std::mt19937 rng(20240611);
  for (int t = 0; t < 10; ++t) {
    const auto type = static_cast<DulacType>(t);
    c.guard("type (" + to_string(type) + ")", [&] {
      bool ok = true;
      for (int i = 0; i < 10; ++i) {
        DulacForm f = dulac_build(type, random_dulac(type, rng));
        ok = ok && closed(f.eta) && f.omega.is_polynomial() && is_integrable(f.omega);
      }
      c.check("type (" + to_string(type) + "): 10 random instances closed", ok);
    });
  }
  Ctx ctx = standard_ctx(2);
  Poly x1 = var(ctx, 0), x2 = var(ctx, 1);
  c.guard("(a) q = x1³ + x2³", [&] {
    DulacComponents comp;
    comp.q = x1.pow(3) + x2.pow(3);
    c.check("(a) q = x1³ + x2³ gives η = dq", dulac_build(DulacType::A, comp).eta == differential(RatFn(*comp.q)));
  });
  c.guard("(b) three lines", [&] {
    DulacComponents comp;
    comp.p = {x1, x2, x1 + x2 + Rat(1)};
    comp.lambda = {one(ctx), one(ctx), RatFn(ctx, -1)};
    c.check("(b) λ=(1,1,-1) on x1, x2, x1+x2+1 closed", closed(dulac_build(DulacType::B, comp).eta));
  });
  c.guard("(f) p = x1, q = x2²", [&] {
    DulacComponents comp;
    comp.p = {x1};
    comp.q = x2.pow(2);
    KForm expect = RatFn(Poly(ctx, 1), x1) * differential(RatFn(x1)) + differential(RatFn(x2.pow(2), x1.pow(2)));
    c.check("(f) p = x1, q = x2² gives dp/p + d(q/p²)", dulac_build(DulacType::F, comp).eta == expect);
  });
  c.guard("(j) divisibility rejected", [&] {
    DulacComponents comp;
    comp.f = x1.pow(2) + x2 + Rat(1);
    comp.g = x2.pow(3) + x1 * x2 + Rat(2);
    bool rejected = false;
    try {
      dulac_build(DulacType::J, comp);
    } catch (const DomainError&) {
      rejected = true;
    }
    c.check("(j) without an affine factor of 3g df - 2f dg is rejected", rejected);
  });
  c.guard("degree constraint", [&] {
    DulacComponents comp;
    comp.q = x1.pow(2);
    bool rejected = false;
    try {
      dulac_build(DulacType::A, comp);
    } catch (const DomainError&) {
      rejected = true;
    }
    c.check("(a) with deg q = 2 is rejected", rejected);
  });
}

void suite_pencil(Collector& c) {
  Pencil p = conic_pencil();
  const Ctx& ctx = p.Q1.ctx();
  c.check("i_R(Q1 dQ2 - Q2 dQ1) = 0", interior_product(radial_field(ctx), p.omega3).is_zero());
  std::mt19937 rng(7);
  for (int i = 0; i < 3; ++i) {
    Rat a0 = random_rat(rng), a1 = random_rat(rng), a2 = random_rat(rng);
    KForm wl = pencil_omega_L(p, a0, a1, a2);
    std::string tag = "L = (" + to_string(a0) + ", " + to_string(a1) + ", " + to_string(a2) + ")";
    c.check("d(ω_L/(Q1Q2)) = 0, " + tag, closed(divide(wl, p.Q1 * p.Q2)));
    c.check("ω_L integrable, " + tag, is_integrable(wl));
    Poly L = var(ctx, 0) * a0 + var(ctx, 1) * a1 + var(ctx, 2) * a2;
    KForm eta = log_form_build({RatFn(ctx, -1), one(ctx)}, {p.Q1, p.Q2}, Poly(ctx), {0, 0});
    c.check("ω_L = Q1Q2(dQ2/Q2 - dQ1/Q1 + dL), " + tag, wl == RatFn(p.Q1 * p.Q2) * (eta + differential(RatFn(L))));
  }
  c.guard("budget", [&] {
    auto pts = p.radial;
    pts.insert(pts.end(), p.centers.begin(), p.centers.end());
    SingularBudget b = singular_budget_check(HomogForm::make(p.omega3), pts);
    c.check("4 radial + 3 centers, total 7 = ν²-ν+1", b.satisfied && b.total == 7);
    bool all_one = true;
    for (const auto& pt : b.points) all_one = all_one && pt.mu == 1;
    c.check("every listed point has μ = 1", all_one);
    SingularBudget partial = singular_budget_check(HomogForm::make(p.omega3), p.radial);
    c.check("radial points alone fall short of the budget", !partial.satisfied && partial.total == 4);
  });
  c.guard("log (1,1,1,1)", [&] {
    KForm w = log_1111();
    c.check("(1,1,1,1) form dicritical", is_dicritical(w));
    c.check("(1,1,1,1) form integrable", is_integrable(w));
    KForm ws = log_1111(Rat(1, 3), Rat(1, 5));
    const Ctx& cs = ws.ctx();
    Poly prod = var(cs, 0) * var(cs, 1) * var(cs, 2) * (var(cs, 0) + var(cs, 1) + var(cs, 2));
    c.check("(1,1,1,1) form over its polar divisor is closed", closed(divide(ws, prod)));
    c.check("(1,1,1,1) form is a homogeneous cubic", ws.is_homogeneous() && ws.order() == 3);
  });
}

void suite_thm31(Collector& c) {
  for (bool printed : {true, false}) {
    CuspA1 a = cusp_a1(printed);
    const Ctx& ctx = a.l.ctx();
    KForm rhs = RatFn(a.l) * differential(RatFn(a.G)) - RatFn(a.G * Rat(3)) * differential(RatFn(a.l));
    bool ident = RatFn(ctx, 8) * a.omega == rhs;
    bool inv = invariant_curve_check(a.omega, a.l);
    if (printed) {
      c.check("a=1 with Q = 3b²/32 (as printed) does not satisfy 8ω = l dG - 3G dl", !ident);
    } else {
      c.check("a=1 with Q = -3b²/32: 8ω = l dG - 3G dl in Q[b][x1,x2]", ident);
      c.check("a=1 with Q = -3b²/32: l = x1 + b x2 + 8 invariant", inv);
      c.check("a=1: ω/(lG) closed", closed(RatFn(Poly(ctx, 1), a.l * a.G) * a.omega));
    }
  }
  // The sign of Q is forced by the jet equations: the a=1 family with Q free is integrable by
  // the cubic G only for one value.
  CuspA0 z = cusp_a0();
  const Ctx& ctx = z.conic.ctx();
  c.check("a=0: conic bQx - 3Qy² + 6 invariant", invariant_curve_check(z.omega, z.conic));
  c.check("a=0: ω'/[(1 + by/2 - Qy²/2)(bQx - 3Qy² + 6)] closed",
          closed(RatFn(Poly(ctx, 1), z.unit * z.conic) * z.omega));
  c.guard("a=0 pullback", [&] {
    Poly x1 = var(ctx, 0), x2 = var(ctx, 1), b = var(ctx, 2), Q = var(ctx, 3);
    KForm w = KForm::one_form(ctx, {RatFn(x1 * (Poly(ctx, 2) + b * x2 - Q * x2.pow(2))),
                                    RatFn(Q * x1.pow(2) * x2 - x2.pow(2) * Rat(3))});
    PolyMap sigma(ctx, ctx, {RatFn(x1.pow(2)), RatFn(x2)});
    c.check("a=0: ω = σ*ω' with σ = (x1², x2)", pullback(z.omega, sigma) == w);
  });
}

void suite_tag(Collector& c) {
  Ctx ctx = tag_ctx();
  std::mt19937 rng(31);
  KForm W = tag_omega1();
  c.check("ω1 closed", closed(W));
  for (int i = 0; i < 3; ++i) {
    Poly x1 = var(ctx, 0), x2 = var(ctx, 1);
    Poly q = x1.pow(2) * random_rat(rng) + x1 * x2 * random_rat(rng) + x2.pow(2) * random_rat(rng);
    KForm th = tag_theta0(q);
    c.check("dθ0 + θ0∧ω1 = 0 symbolic in λ1, λ2, q = " + q.to_string(), (exterior_derivative(th) + wedge(th, W)).is_zero());
    c.check("transversely affine with -ω1, q = " + q.to_string(), transversely_affine_check(th, -W));
    c.check("not transversely affine with +ω1 (sign control), q = " + q.to_string(), !transversely_affine_check(th, W));
    KForm sp = specialize(th, {{2, Rat(1, 3)}, {3, Rat(1, 5)}});
    Ctx plain = standard_ctx(2);
    KForm flat = KForm::one_form(plain, {RatFn(sp.components()[0].num().remap(plain, {0, 1, 2, 3})),
                                         RatFn(sp.components()[1].num().remap(plain, {0, 1, 2, 3}))});
    c.check("μ(θ0; 0) = 4 for λ = (1/3, 1/5, 7/15)", milnor_number(flat) == Milnor(4u));
  }
}

void suite_exceptional(Collector& c) {
  Exceptional e = exceptional();
  const Ctx& ctx = e.F.ctx();
  Poly x4 = var(ctx, 3);
  KForm omega3(ctx, 1);
  bool divisible = true;
  for (const auto& [m, v] : e.numerator.coeffs()) {
    auto q = v.num().divide_exact(x4);
    divisible = divisible && q.has_value();
    if (q) omega3.set(m, RatFn(*q));
  }
  c.check("x4 divides every coefficient of 2G dF - 3F dG", divisible);
  c.check("Ω3 integrable", is_integrable(omega3));
  c.check("i_R Ω3 = 0", interior_product(radial_field(ctx), omega3).is_zero());
  c.check("Ω3 ∧ d(F²/G³) = 0", wedge(omega3, differential(RatFn(e.F.pow(2), e.G.pow(3)))).is_zero());
  std::mt19937 rng(11);
  for (int i = 0; i < 3; ++i) {
    Rat a = random_rat(rng, 9, true), b = random_rat(rng, 9, true), cc = random_rat(rng, 9, true);
    c.guard("section", [&] {
      KForm w = exceptional_section(a, b, cc);
      std::string tag = "(a,b,c) = (" + to_string(a) + ", " + to_string(b) + ", " + to_string(cc) + ")";
      c.check("(2g df - 3f dg + fg dL²)/L polynomial, " + tag, w.is_polynomial());
      c.check("(2g df - 3f dg + fg dL²)/L integrable, " + tag, is_integrable(w));
    });
  }
}

void suite_milnor(Collector& c) {
  c.check("μ = 5 for (x1 - x2³)dx1 + x1x2²dx2", milnor_number(cusp_form()) == Milnor(5u));
  c.check("μ = 3 for (2x1 + x2²)dx1 + 2x1x2dx2", milnor_number(closed_omega2()) == Milnor(3u));
  c.check("μ = 6 for the Airy model", milnor_number(airy_affine()) == Milnor(6u));
  Ctx ctx = standard_ctx(2);
  Poly x1 = var(ctx, 0), x2 = var(ctx, 1);
  c.check("x1 dx1 has INFINITE μ", !milnor_number(KForm::one_form(ctx, {RatFn(x1), RatFn(ctx)})).has_value());
  c.check("ω ∧ dF = 0 for F = (3x1 - 2x2³)/x1³", wedge(cusp_form(), differential(cusp_first_integral())).is_zero());
  std::mt19937 rng(5);
  bool sym = true;
  for (int i = 0; i < 10; ++i) {
    Poly f = random_poly(ctx, 3, rng), g = random_poly(ctx, 3, rng);
    f = f - Poly(ctx, f.constant_term());
    g = g - Poly(ctx, g.constant_term());
    sym = sym && intersection_multiplicity(f, g) == intersection_multiplicity(g, f);
  }
  c.check("I(f,g) = I(g,f) on random pairs", sym);
}

void suite_blowup(Collector& c) {
  Ctx ctx = standard_ctx(3);
  Poly x1 = var(ctx, 0), x2 = var(ctx, 1), x3 = var(ctx, 2);
  KForm w = RatFn(x3) * (RatFn(x1) * KForm::dx(ctx, 1) - RatFn(x2) * KForm::dx(ctx, 0));
  StrictTransform st = strict_transform(w, blowup_chart(ctx, 0));
  c.check("x3(x1dx2 - x2dx1), chart x1: m = 3", st.m == 3);
  c.check("x3(x1dx2 - x2dx1), chart x1: strict transform x3 dx2",
          st.form == RatFn(x3) * KForm::dx(ctx, 1));
  std::mt19937 rng(21);
  int agree = 0, total = 0;
  for (int i = 0; total < 30; ++i) {
    auto hom = [&](unsigned d) {
      Poly p(ctx);
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
          Exponents e{};
          e[0] = static_cast<std::uint16_t>(a);
          e[1] = static_cast<std::uint16_t>(b);
          e[2] = static_cast<std::uint16_t>(d - a - b);
          p.add_term(e, random_rat(rng, 5));
        }
      return p;
    };
    const unsigned d1 = 1 + i % 2, d2 = 1 + (i / 2) % 2;
    Poly f1 = hom(d1), f2 = hom(d2);
    if (f1.is_zero() || f2.is_zero()) continue;
    // Odd i: g df (not dicritical); even i: d1 f1 df2 - d2 f2 df1 (dicritical).
    KForm form = i % 2 ? RatFn(f2) * differential(RatFn(f1))
                       : RatFn(f1 * Rat(d1)) * differential(RatFn(f2)) - RatFn(f2 * Rat(d2)) * differential(RatFn(f1));
    if (form.is_zero()) continue;
    ++total;
    const unsigned nu = form.order();
    StrictTransform s = strict_transform(form, blowup_chart(ctx, i % 3));
    agree += (s.m == nu + 1) == is_dicritical(form);
  }
  c.check("30 random homogeneous integrable forms: m = ν+1 iff dicritical", agree == total, std::to_string(agree) + "/" + std::to_string(total));
}

void suite_chi(Collector& c) {
  const std::vector<std::pair<Rat, bool>> cases = {{Rat(-2), true},    {Rat(-1, 4), true}, {Rat(-5), true},
                                                   {Rat(3, 7), true},  {Rat(-3, 5), false}, {Rat(-3, 7), false},
                                                   {Rat(0), true}};
  for (const auto& [r, expect] : cases)
    c.check("χ ∋ " + to_string(r) + " is " + (expect ? "true" : "false"), chi_contains(r) == expect);
}

void suite_deploy(Collector& c) {
  auto cases = [](unsigned mu) {
    std::vector<std::tuple<unsigned, unsigned, Verdict>> out;
    for (const auto& x : deployment_outcomes(mu).cases) out.emplace_back(x.k, x.p, x.verdict);
    return out;
  };
  using V = Verdict;
  c.check("μ = 2: (3,0) first integral", cases(2) == decltype(cases(2)){{3, 0, V::FirstIntegral}});
  c.check("μ = 3: (4,0) first integral, (2,1) integrating factor",
          cases(3) == decltype(cases(3)){{4, 0, V::FirstIntegral}, {2, 1, V::IntegratingFactor}});
  c.check("μ = 5: (6,0), (3,1), (2,2) unresolved",
          cases(5) == decltype(cases(5)){{6, 0, V::FirstIntegral}, {3, 1, V::IntegratingFactor}, {2, 2, V::Unresolved}});
  bool ok = true;
  for (unsigned mu = 2; mu < 30; ++mu)
    for (const auto& x : deployment_outcomes(mu).cases) ok = ok && x.k * (x.p + 1) == mu + 1;
  c.check("k(p+1) = μ+1 for μ < 30", ok);
  c.guard("loray", [&] {
    bool all = true;
    for (unsigned k : {2u, 3u, 4u})
      for (unsigned p : {0u, 1u, 2u}) {
        Ctx ctx = standard_ctx(2);
        LorayData d{var(ctx, 1).pow(k), Series{{Rat(0)}, 1}, Series{{}, 1}};
        d.l1.coeffs.assign(p + 1, Rat(0));
        d.l1.coeffs[p] = Rat(3, 2);
        d.l1.order = p + 1;
        all = all && milnor_number(loray_form(d)) == Milnor(k * (p + 1) - 1);
      }
    c.check("μ(loray form, f = x2^k, l1 = εu^p) = k(p+1) - 1", all);
  });
}

void suite_factor_shapes(Collector& c) {
  const Rat b(-3, 5);
  c.check("-3/5 not in χ", !chi_contains(b));
  SeriesSearch s = integrating_factor_search(omega2_b(b), 6);
  bool shapes = !s.basis.empty();
  for (const auto& sh : s.shapes)
    shapes = shapes && sh.k == 1 && sh.l == 2u && sh.dg_dx1_at_0 == RatFn(s.basis[0].ctx(), Rat(2) / (b + 2));
  c.check("b = -3/5, N = 6: every factor is x1·g, g(0,x2) = x2²·unit, ∂g/∂x1(0) = 2/(b+2)", shapes,
          std::to_string(s.basis.size()) + " basis element(s)");
  KForm t3 = ramified_omega2();
  const Ctx& ctx = t3.ctx();
  Poly x1 = var(ctx, 0);
  c.check("θ3/x1² closed", closed(divide(t3, x1.pow(2))));
  c.check("θ3/x1³ is not closed (the exponent forced by b = -2 is 2)", !closed(divide(t3, x1.pow(3))));
  SeriesSearch s3 = integrating_factor_search(t3, 5);
  c.check("integrating factors of θ3 to order 5: exactly x1²", s3.basis.size() == 1 && s3.basis[0] == x1.pow(2));
  SeriesSearch fi = first_integral_search(closed_omega2(), 3);
  Poly x2 = var(ctx, 1);
  bool found = false;
  for (const auto& f : fi.basis) found = found || f == x1.pow(2) + x1 * x2.pow(2);
  c.check("first integral x1² + x1x2² found at N = 3", found);
}

void suite_family(Collector& c) {
  auto e1 = family_extract(cusp_form());
  c.check("cusp form in Ω1 with zero coefficients", e1.data && e1.data->family == Family::Omega1 && e1.data->b.is_zero() &&
                                                        e1.data->a.is_zero() && e1.data->P.is_zero() && e1.data->Q.is_zero());
  if (e1.data) c.check("cusp form: μ-table 5 equals Fulton", mu_table(*e1.data) == Milnor(5u) && milnor_number(cusp_form()) == Milnor(5u));
  auto e2 = family_extract(closed_omega2());
  c.check("(2x1 + x2²)dx1 + 2x1x2dx2 in Ω2 with b = 2", e2.data && e2.data->family == Family::Omega2 &&
                                                          e2.data->b == RatFn(e2.data->b.ctx(), 2));
  if (e2.data) c.check("closed Ω2 member: μ-table 3", mu_table(*e2.data) == Milnor(3u));
  auto ea = family_extract(airy_affine());
  c.check("Airy model in Ω2 with a = b = Q = 0, P = 1, μ = 6",
          ea.data && ea.data->P == RatFn(ea.data->P.ctx(), 1) && mu_table(*ea.data) == Milnor(6u));
  Ctx ctx = standard_ctx(2);
  Poly x1 = var(ctx, 0), x2 = var(ctx, 1);
  auto en = family_extract(KForm::one_form(ctx, {RatFn(x2), RatFn(x1)}));
  c.check("x2dx1 + x1dx2 not in the families", !en.data, en.reason);
  auto el = family_extract(KForm::one_form(ctx, {RatFn(x1), RatFn(x2.pow(2))}));
  c.check("x1dx1 + x2²dx2: line x1 = 0 not invariant", !el.data, el.reason);
  std::mt19937 rng(34);
  int agree = 0, total = 0, round = 0;
  for (int i = 0; i < 40; ++i) {
    const int row = i % 6;
    OmegaFamilyData d = random_family(row, ctx, rng);
    KForm w = family_reconstruct(d, ctx);
    ++total;
    agree += milnor_number(w) == Milnor(family_row_mu(row)) && mu_table(d) == Milnor(family_row_mu(row));
    auto back = family_extract(w);
    round += back.data && family_reconstruct(*back.data, ctx) == w;
  }
  c.check("μ-table equals Fulton on 40 random instances", agree == total, std::to_string(agree) + "/" + std::to_string(total));
  c.check("extract ∘ reconstruct round-trips on 40 random instances", round == total);
  Ctx pc = standard_ctx(2, {"b"});
  OmegaFamilyData sym = random_family(0, pc, rng);
  sym.b = RatFn(var(pc, 2));
  bool refused = false;
  try {
    mu_table(sym);
  } catch (const DomainError&) {
    refused = true;
  }
  c.check("symbolic b without assumption is refused", refused);
  c.check("symbolic b assumed nonzero gives μ = 3", mu_table(sym, {"b"}) == Milnor(3u));
}

const std::map<std::string, void (*)(Collector&)>& registry() {
  static const std::map<std::string, void (*)(Collector&)> r = {
      {"blowup", suite_blowup}, {"chi", suite_chi},       {"deploy", suite_deploy}, {"dulac", suite_dulac},
      {"euler", suite_euler},   {"exceptional", suite_exceptional}, {"family", suite_family},
      {"factor_shapes", suite_factor_shapes}, {"milnor", suite_milnor}, {"pencil", suite_pencil}, {"tag", suite_tag},
      {"thm31", suite_thm31}};
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<SuiteItem> run_suite(const std::string& name) {
  Collector c;
  if (name == "all") {
    for (const auto& [k, f] : registry()) {
      Collector sub;
      sub.guard(k, [&] { f(sub); });
      for (auto& it : sub.items) c.items.push_back({k + ": " + it.name, it.passed, it.detail});
    }
    return c.items;
  }
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite '" + name + "'");
  c.guard(name, [&] { it->second(c); });
  return c.items;
}

}  // namespace foliage::cli
