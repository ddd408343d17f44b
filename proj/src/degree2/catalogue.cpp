#include "foliage/catalogue.hpp"

#include "foliage/error.hpp"

namespace foliage::catalogue {

namespace {

Poly X(const Ctx& c, std::size_t i) { return Poly::var(c, i); }
Poly K(const Ctx& c, const Rat& v) { return Poly(c, v); }
KForm one(const Ctx& c, const Poly& a, const Poly& b) { return KForm::one_form(c, {RatFn(a), RatFn(b)}); }
KForm d(const RatFn& f) { return differential(f); }

Ctx plane() { return standard_ctx(2); }
Ctx proj_plane() { return make_ctx({"x0", "x1", "x2"}); }

}  // namespace

KForm cusp_form() {
  Ctx c = plane();
  Poly x1 = X(c, 0), x2 = X(c, 1);
  return one(c, x1 - x2.pow(3), x1 * x2.pow(2));
}

RatFn cusp_first_integral() {
  Ctx c = plane();
  Poly x1 = X(c, 0), x2 = X(c, 1);
  return RatFn(x1 * Rat(3) - x2.pow(3) * Rat(2), x1.pow(3));
}

KForm closed_omega2() {
  Ctx c = plane();
  Poly x1 = X(c, 0), x2 = X(c, 1);
  return one(c, x1 * Rat(2) + x2.pow(2), x1 * x2 * Rat(2));
}

KForm ramified_omega2() { return omega2_b(-2); }

KForm omega2_b(const Rat& b) {
  Ctx c = plane();
  Poly x1 = X(c, 0), x2 = X(c, 1);
  return one(c, x1 + x2.pow(2), x1 * x2 * b);
}

KForm airy_affine() {
  Ctx c = plane();
  Poly x1 = X(c, 0), x2 = X(c, 1);
  return one(c, x1 + x2.pow(2) - x1.pow(2) * x2, x1.pow(3));
}

CuspA1 cusp_a1(bool q_positive) {
  Ctx c = standard_ctx(2, {"b"});
  Poly x1 = X(c, 0), x2 = X(c, 1), b = X(c, 2);
  Poly Q = b.pow(2) * Rat(q_positive ? 3 : -3, 32);
  Poly q = b * x1.pow(2) * Rat(-3, 32) + Q * x1 * x2 - x2.pow(2) * Rat(3, 8);
  Poly A = x1 * Rat(2) + x1 * (x1 + b * x2) - x2 * q;
  Poly B = x2.pow(2) * Rat(-3) + x1 * q;
  Poly l = x1 + b * x2 + Rat(8);
  Poly G = x1.pow(2) - x2.pow(3) + b * x1.pow(2) * x2 * Rat(3, 8) + x1.pow(3) * Rat(3, 8);
  return {one(c, A, B), l, G};
}

CuspA0 cusp_a0() {
  Ctx c = standard_ctx(2, {"b", "Q"});
  Poly x = X(c, 0), y = X(c, 1), b = X(c, 2), Q = X(c, 3);
  Poly unit = K(c, 1) + b * y * Rat(1, 2) - Q * y.pow(2) * Rat(1, 2);
  Poly conic = b * Q * x - Q * y.pow(2) * Rat(3) + Rat(6);
  return {one(c, unit, Q * x * y - y.pow(2) * Rat(3)), conic, unit};
}

Ctx tag_ctx() { return standard_ctx(2, {"l1", "l2"}); }

KForm tag_theta0(const Poly& q) {
  Ctx c = tag_ctx();
  require_same(c, q.ctx());
  Poly x1 = X(c, 0), x2 = X(c, 1), l1 = X(c, 2), l2 = X(c, 3);
  Poly l3 = K(c, 1) - l1 - l2;
  // x1x2(x1-x2)·(λ1/x1 - λ3/(x2-x1)) and x1x2(x1-x2)·(λ2/x2 + λ3/(x2-x1)), expanded.
  Poly A = l1 * x2 * (x1 - x2) + l3 * x1 * x2 - q * x2;
  Poly B = l2 * x1 * (x1 - x2) - l3 * x1 * x2 + q * x1;
  return one(c, A, B);
}

KForm tag_omega1() {
  Ctx c = tag_ctx();
  Poly x1 = X(c, 0), x2 = X(c, 1), l1 = X(c, 2), l2 = X(c, 3);
  Poly l3 = K(c, 1) - l1 - l2;
  Poly s = x2 - x1;
  return RatFn(l1 + Rat(1), x1) * d(x1) + RatFn(l2 + Rat(1), x2) * d(x2) + RatFn(l3 + Rat(1), s) * d(s);
}

Pencil conic_pencil() {
  Ctx c = proj_plane();
  Poly x0 = X(c, 0), x1 = X(c, 1), x2 = X(c, 2);
  Pencil p{x0.pow(2) - x1.pow(2), x0.pow(2) - x2.pow(2), KForm(c, 1), {}, {}};
  p.omega3 = RatFn(p.Q1) * d(p.Q2) - RatFn(p.Q2) * d(p.Q1);
  // Chart x0 = 1 carries (x1, x2); chart x1 = 1 carries (x0, x2); chart x2 = 1 carries (x0, x1).
  for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
    p.radial.push_back({0, {Rat(u), Rat(v)}});
  for (std::size_t chart = 0; chart < 3; ++chart) p.centers.push_back({chart, {Rat(0), Rat(0)}});
  return p;
}

KForm pencil_omega_L(const Pencil& p, const Rat& a0, const Rat& a1, const Rat& a2) {
  const Ctx& c = p.Q1.ctx();
  Poly L = X(c, 0) * a0 + X(c, 1) * a1 + X(c, 2) * a2;
  return p.omega3 + RatFn(p.Q1 * p.Q2) * d(L);
}

namespace {
KForm log_1111_in(const Ctx& c, const RatFn& l0, const RatFn& l1) {
  Poly x0 = X(c, 0), x1 = X(c, 1), x2 = X(c, 2);
  Poly s = x0 + x1 + x2;
  RatFn l2 = RatFn(c, 1) - l0 - l1;
  KForm eta = log_form_build({l0, l1, l2, RatFn(c, -1)}, {x0, x1, x2, s}, Poly(c), {0, 0, 0, 0});
  return RatFn(x0 * x1 * x2 * s) * eta;
}
}  // namespace

KForm log_1111() {
  Ctx c = make_ctx({"x0", "x1", "x2"}, {"l0", "l1"});
  return log_1111_in(c, X(c, 3), X(c, 4));
}

KForm log_1111(const Rat& l0, const Rat& l1) {
  Ctx c = proj_plane();
  return log_1111_in(c, RatFn(c, l0), RatFn(c, l1));
}

Exceptional exceptional() {
  Ctx c = standard_ctx(4);
  Poly x1 = X(c, 0), x2 = X(c, 1), x3 = X(c, 2), x4 = X(c, 3);
  Poly F = x3 * x4.pow(2) - x1 * x2 * x4 + x1.pow(3) * Rat(1, 3);
  Poly G = x2 * x4 - x1.pow(2) * Rat(1, 2);
  KForm num = RatFn(G * Rat(2)) * d(F) - RatFn(F * Rat(3)) * d(G);
  return {F, G, num};
}

KForm exceptional_section(const Rat& a, const Rat& b, const Rat& c3) {
  Exceptional e = exceptional();
  Ctx c = standard_ctx(3);
  Poly L = X(c, 0) * a + X(c, 1) * b + X(c, 2) * c3;
  PolyMap onto(c, e.F.ctx(), {X(c, 0), X(c, 1), X(c, 2), L});
  Poly f = substitute(e.F, onto).as_poly(), g = substitute(e.G, onto).as_poly();
  KForm num = RatFn(g * Rat(2)) * d(f) - RatFn(f * Rat(3)) * d(g) + RatFn(f * g) * d(L.pow(2));
  return RatFn(K(c, 1), L) * num;
}

std::vector<NamedForm> homogeneous_corpus() {
  std::vector<NamedForm> out;
  out.push_back({"conic pencil", conic_pencil().omega3, true});
  out.push_back({"log (1,1,1,1)", log_1111(Rat(1, 3), Rat(1, 5)), true});
  out.push_back({"log (1,1,1,1) symbolic", log_1111(), true});
  Exceptional e = exceptional();
  KForm omega3(e.numerator.ctx(), 1);
  for (const auto& [m, v] : e.numerator.coeffs()) omega3.set(m, RatFn(*v.num().divide_exact(X(e.F.ctx(), 3))));
  out.push_back({"exceptional", omega3, true});
  out.push_back({"exceptional numerator", e.numerator, true});
  out.push_back({"airy homogenized", homogenize_affine(airy_affine(), 3).omega(), true});
  out.push_back({"cusp homogenized", homogenize_affine(cusp_form(), 3).omega(), true});
  Ctx c3 = standard_ctx(3);
  Poly x1 = X(c3, 0), x2 = X(c3, 1), x3 = X(c3, 2);
  out.push_back({"x3(x1dx2 - x2dx1)", RatFn(x3) * (RatFn(x1) * d(x2) - RatFn(x2) * d(x1)), true});
  out.push_back({"x1x2 dx3", RatFn(x1 * x2) * d(x3), false});
  out.push_back({"d(x1³ + x2x3²)", d(RatFn(x1.pow(3) + x2 * x3.pow(2))), false});
  return out;
}

Rat random_rat(std::mt19937& rng, int range, bool nonzero) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  for (;;) {
    Rat r(num(rng), den(rng));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

Poly random_poly(const Ctx& ctx, unsigned degree, std::mt19937& rng) {
  for (;;) {
    Poly p(ctx);
    Exponents e{};
    for (unsigned dg = 0; dg <= degree; ++dg)
      for (unsigned i = 0; i <= dg; ++i) {
        e[0] = static_cast<std::uint16_t>(i);
        e[1] = static_cast<std::uint16_t>(dg - i);
        p.add_term(e, random_rat(rng));
      }
    if (p.geo_degree() == degree) return p;
  }
}

DulacComponents random_dulac(DulacType t, std::mt19937& rng) {
  Ctx c = plane();
  DulacComponents out;
  auto lam = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out.lambda.emplace_back(c, random_rat(rng, 9, true));
  };
  switch (t) {
    case DulacType::A: out.q = random_poly(c, 3, rng); break;
    case DulacType::B:
      for (int i = 0; i < 3; ++i) out.p.push_back(random_poly(c, 1, rng));
      lam(3);
      break;
    case DulacType::C:
      out.p = {random_poly(c, 2, rng), random_poly(c, 1, rng)};
      lam(2);
      break;
    case DulacType::D:
    case DulacType::E:
      out.p = {random_poly(c, 1, rng), random_poly(c, 1, rng)};
      out.q = random_poly(c, 1, rng);
      lam(2);
      break;
    case DulacType::F:
    case DulacType::G:
    case DulacType::H:
      out.p = {random_poly(c, 1, rng)};
      out.q = random_poly(c, 2, rng);
      break;
    case DulacType::I:
      out.p = {random_poly(c, 2, rng)};
      out.q = random_poly(c, 1, rng);
      break;
    case DulacType::J: {
      // Restrict the exceptional pair to a random plane (x, y) -> M (x, y, 1).
      Exceptional e = exceptional();
      for (;;) {
        std::vector<RatFn> im;
        for (int i = 0; i < 4; ++i)
          im.emplace_back(X(c, 0) * random_rat(rng) + X(c, 1) * random_rat(rng) + random_rat(rng));
        PolyMap m(c, e.F.ctx(), im);
        Poly f = substitute(e.G, m).as_poly(), g = substitute(e.F, m).as_poly();
        if (f.geo_degree() == 2 && g.geo_degree() == 3 && poly_gcd(f, g).is_constant()) {
          out.f = f;
          out.g = g;
          break;
        }
      }
      break;
    }
  }
  return out;
}

unsigned family_row_mu(int row) {
  static const unsigned mu[] = {3, 4, 5, 6, 4, 5};
  if (row < 0 || row > 5) throw DomainError("family row must be 0..5");
  return mu[row];
}

OmegaFamilyData random_family(int row, const Ctx& ctx, std::mt19937& rng) {
  family_row_mu(row);
  auto r = [&](bool nz) { return RatFn(ctx, random_rat(rng, 9, nz)); };
  const bool omega1 = row >= 4;
  OmegaFamilyData d{omega1 ? Family::Omega1 : Family::Omega2,
                    r(false), r(false), r(false), r(false), r(false), r(false),
                    omega1 ? Rat(0) : Rat(1), omega1 ? Rat(1) : Rat(0), RatFn(ctx, 1), RatFn(ctx, 1)};
  const RatFn zero(ctx);
  if (omega1) {
    d.b = row == 4 ? r(true) : zero;
    return d;
  }
  d.b = row == 0 ? r(true) : zero;
  if (row >= 1) d.a = row == 1 ? r(true) : zero;
  if (row >= 2) d.Q = row == 2 ? r(true) : zero;
  if (row == 3) d.P = r(true);
  return d;
}

}  // namespace foliage::catalogue
