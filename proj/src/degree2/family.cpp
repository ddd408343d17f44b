#include "foliage/degree2.hpp"
#include "foliage/error.hpp"

namespace foliage {

std::string to_string(Family f) { return f == Family::Omega1 ? "Omega1" : "Omega2"; }

namespace {

// Coefficient of x1^i x2^j, as a polynomial in the parameters.
Poly coef(const Poly& p, unsigned i, unsigned j) {
  Poly out(p.ctx());
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != i || e[1] != j) continue;
    Exponents par = e;
    par[0] = par[1] = 0;
    out.add_term(par, c);
  }
  return out;
}

Poly mono(const Ctx& ctx, unsigned i, unsigned j) {
  Exponents e{};
  e[0] = static_cast<std::uint16_t>(i);
  e[1] = static_cast<std::uint16_t>(j);
  return Poly::monomial(ctx, e);
}

FamilyResult reject(std::string why) { return {std::nullopt, std::move(why)}; }

}  // namespace

FamilyResult family_extract(const KForm& theta) {
  const Ctx& ctx = theta.ctx();
  if (theta.degree() != 1 || ctx->arity() != 2) throw DomainError("family_extract: 1-form in 2 variables expected");
  if (!theta.is_polynomial()) throw NotPolynomial();
  if (theta.is_zero()) return reject("zero form");
  if (theta.top_degree() > 3) return reject("degree exceeds 3");
  auto comps = theta.components();
  const Poly A = comps[0].num(), B = comps[1].num();

  const Poly c = coef(A, 1, 0);
  if (!A.geo_homogeneous_part(0).is_zero() || !B.geo_homogeneous_part(0).is_zero())
    return reject("form is nonsingular at the origin");
  if (!coef(A, 0, 1).is_zero() || !B.geo_homogeneous_part(1).is_zero() || !c.is_constant() || c.is_zero())
    return reject("1-jet is not a nonzero multiple of x1 dx1");
  if (!coef(B, 0, 2).is_zero() || !coef(B, 0, 3).is_zero())
    return reject("line x1=0 not invariant, μ=2");

  const Poly P = coef(B, 3, 0), Q = coef(B, 2, 1), R = coef(B, 1, 2);
  if (!coef(A, 3, 0).is_zero() || coef(A, 2, 1) != -P || coef(A, 1, 2) != -Q || coef(A, 0, 3) != -R)
    return reject("cubic part is not q·(x1 dx2 - x2 dx1)");
  const Poly gamma = coef(A, 0, 2);
  if (!gamma.is_constant() || !R.is_constant()) return reject("coefficients of x2² dx1 and x1x2² dx2 must be numeric");
  const Rat cv = c.to_rat(), gv = gamma.is_zero() ? Rat(0) : gamma.to_rat(), rv = R.is_zero() ? Rat(0) : R.to_rat();
  if ((gv == 0) == (rv == 0))
    return reject(gv == 0 ? "both γ and R vanish" : "γ and R are both nonzero");

  OmegaFamilyData d{gv == 0 ? Family::Omega1 : Family::Omega2,
                    RatFn(ctx), RatFn(ctx), RatFn(ctx), RatFn(ctx), RatFn(ctx), RatFn(ctx),
                    0, 0, RatFn(ctx), RatFn(ctx)};
  // x1 -> t x1 and multiplication by k send c to 1 and the distinguished coefficient (γ or R) to 1.
  const Rat s = gv == 0 ? rv : gv;
  const Rat t = s / cv, k = cv / (s * s);
  auto scaled = [&](const Poly& p, unsigned x1_power) {
    Rat f = k;
    for (unsigned i = 0; i < x1_power; ++i) f *= t;
    return RatFn(p * f);
  };
  // Powers of t: x1·αx1 dx1 → t³, x1·βx2 dx1 → t², x1·a x1 dx2 → t², x1·b x2 dx2 → t, P → t³, Q → t².
  d.alpha = scaled(coef(A, 2, 0), 3);
  d.beta = scaled(coef(A, 1, 1), 2);
  d.a = scaled(coef(B, 2, 0), 2);
  d.b = scaled(coef(B, 1, 1), 1);
  d.P = scaled(P, 3);
  d.Q = scaled(Q, 2);
  d.gamma = gv == 0 ? Rat(0) : Rat(1);
  d.R = gv == 0 ? Rat(1) : Rat(0);
  d.t = RatFn(ctx, t);
  d.k = RatFn(ctx, k);
  return {d, ""};
}

KForm family_reconstruct(const OmegaFamilyData& d, const Ctx& ctx) {
  if (ctx->arity() != 2) throw DomainError("family_reconstruct: 2 variables expected");
  for (const auto* v : {&d.alpha, &d.beta, &d.a, &d.b, &d.P, &d.Q}) require_same(ctx, v->ctx());
  const RatFn x1 = Poly::var(ctx, 0), x2 = Poly::var(ctx, 1);
  RatFn q = d.P * RatFn(mono(ctx, 2, 0)) + d.Q * RatFn(mono(ctx, 1, 1)) + RatFn(mono(ctx, 0, 2) * d.R);
  RatFn A = x1 * (RatFn(ctx, 1) + d.alpha * x1 + d.beta * x2) + RatFn(mono(ctx, 0, 2) * d.gamma) - x2 * q;
  RatFn B = x1 * (d.a * x1 + d.b * x2) + x1 * q;
  return KForm::one_form(ctx, {A, B});
}

Milnor mu_table(const OmegaFamilyData& d, const Assumptions& nonzero) {
  auto nz = [&](const RatFn& v, const std::string& name) {
    if (v.is_zero()) return false;
    if (!v.has_geometric() && v.is_constant()) return true;
    if (nonzero.count(name)) return true;
    throw DomainError("mu_table: cannot decide whether " + name + " vanishes; assume it nonzero or substitute a value");
  };
  if (d.family == Family::Omega1) return nz(d.b, "b") ? 4u : 5u;
  if (nz(d.b, "b")) return 3u;
  if (nz(d.a, "a")) return 4u;
  if (nz(d.Q, "Q")) return 5u;
  if (nz(d.P, "P")) return 6u;
  return std::nullopt;  // θ = A dx1 with B ≡ 0
}

bool chi_contains(const Rat& r) {
  if (r > 0 || is_integer(r)) return true;
  // (l-2)/(k-1) with l ∈ {0, 1} gives -2/n and -1/n.
  Int n = abs(r.get_num());
  return n == 1 || n == 2;
}

}  // namespace foliage
