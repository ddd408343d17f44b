#include "foliage/degree2.hpp"
#include "foliage/error.hpp"

namespace foliage {

std::string to_string(DulacType t) { return std::string(1, static_cast<char>('a' + static_cast<int>(t))); }

DulacType parse_dulac_type(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'j') return static_cast<DulacType>(s[0] - 'a');
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'J') return static_cast<DulacType>(s[0] - 'A');
  throw DomainError("unknown Dulac type '" + s + "' (expected a..j)");
}

namespace {

void need_degree(const Poly& p, unsigned deg, const char* what) {
  if (p.ctx()->arity() != 2) throw DomainError("dulac: components live in 2 variables");
  if (p.has_params()) throw ParametersPresent();
  if (p.is_zero() || p.geo_degree() != deg)
    throw DomainError(std::string("dulac: ") + what + " must have degree " + std::to_string(deg));
}

const Poly& need(const std::optional<Poly>& p, const char* what) {
  if (!p) throw DomainError(std::string("dulac: missing component ") + what);
  return *p;
}

KForm dlog(const Poly& p) { return RatFn(Poly(p.ctx(), 1), p) * differential(RatFn(p)); }

// Polynomial multiple of η: multiply by the lcm of denominators, divide by the gcd of numerators.
KForm clear(const KForm& eta) {
  const Ctx& ctx = eta.ctx();
  Poly den(ctx, 1);
  for (const auto& [m, c] : eta.coeffs()) den = poly_lcm(den, c.den());
  KForm w = RatFn(den) * eta;
  Poly g(ctx);
  for (const auto& [m, c] : w.coeffs()) g = poly_gcd(g, c.as_poly());
  if (g.is_zero()) return w;
  return RatFn(Poly(ctx, 1), g) * w;
}

}  // namespace

DulacForm dulac_build(DulacType type, const DulacComponents& c) {
  auto lam = [&](std::size_t n) {
    if (c.lambda.size() != n) throw DomainError("dulac: type " + to_string(type) + " takes " + std::to_string(n) + " residues");
    for (const auto& l : c.lambda)
      if (l.is_zero()) throw DomainError("dulac: residues must be nonzero");
      else if (l.has_geometric()) throw DomainError("dulac: residues must be constants");
  };
  auto ps = [&](std::vector<unsigned> degs) {
    if (c.p.size() != degs.size()) throw DomainError("dulac: type " + to_string(type) + " takes " + std::to_string(degs.size()) + " polynomials p");
    for (std::size_t i = 0; i < degs.size(); ++i) need_degree(c.p[i], degs[i], "p");
  };
  auto qd = [&](unsigned deg) {
    const Poly& q = need(c.q, "q");
    need_degree(q, deg, "q");
    return q;
  };
  std::optional<KForm> eta;
  switch (type) {
    case DulacType::A: {
      eta = differential(RatFn(qd(3)));
      break;
    }
    case DulacType::B: {
      ps({1, 1, 1});
      lam(3);
      eta = c.lambda[0] * dlog(c.p[0]) + c.lambda[1] * dlog(c.p[1]) + c.lambda[2] * dlog(c.p[2]);
      break;
    }
    case DulacType::C: {
      ps({2, 1});
      lam(2);
      eta = c.lambda[0] * dlog(c.p[0]) + c.lambda[1] * dlog(c.p[1]);
      break;
    }
    case DulacType::D:
    case DulacType::E: {
      ps({1, 1});
      lam(2);
      Poly q = qd(1);
      RatFn exact = type == DulacType::D ? RatFn(q) : RatFn(q, c.p[0]);
      eta = c.lambda[0] * dlog(c.p[0]) + c.lambda[1] * dlog(c.p[1]) + differential(exact);
      break;
    }
    case DulacType::F:
    case DulacType::G:
    case DulacType::H:
    case DulacType::I: {
      const bool conic = type == DulacType::I;
      ps({conic ? 2u : 1u});
      Poly q = qd(conic ? 1 : 2);
      const Poly& p = c.p[0];
      RatFn exact = type == DulacType::F   ? RatFn(q, p * p)
                    : type == DulacType::G ? RatFn(q, p)
                                           : RatFn(q);
      eta = dlog(p) + differential(exact);
      break;
    }
    case DulacType::J: {
      const Poly& f = need(c.f, "f");
      const Poly& g = need(c.g, "g");
      need_degree(f, 2, "f");
      need_degree(g, 3, "g");
      KForm num = RatFn(g * Rat(3)) * differential(RatFn(f)) - RatFn(f * Rat(2)) * differential(RatFn(g));
      Poly h(f.ctx());
      for (const auto& [m, v] : num.coeffs()) h = poly_gcd(h, v.as_poly());
      if (h.is_zero() || !affine_factor(h))
        throw DomainError("dulac: 3g df - 2f dg is not divisible by an affine function");
      eta = RatFn(Poly(f.ctx(), 3)) * dlog(f) - RatFn(Poly(f.ctx(), 2)) * dlog(g);
      break;
    }
  }
  if (!is_closed(*eta)) throw Error("internal: Dulac form is not closed");
  return {type, *eta, clear(*eta)};
}

std::optional<Poly> affine_factor(const Poly& h) {
  const Ctx& ctx = h.ctx();
  if (ctx->arity() != 2) throw DomainError("affine_factor: 2 variables expected");
  if (h.has_params()) throw ParametersPresent();
  if (h.is_zero() || h.is_constant()) return std::nullopt;
  const unsigned n = h.geo_degree();
  if (n == 1) return h.primitive();
  // Auxiliary context: the line parameter s and the unknown constant term c.
  Ctx aux = make_ctx({"s", "c"});
  const Poly s = Poly::var(aux, 0), cvar = Poly::var(aux, 1);
  auto try_line = [&](const Poly& xs, const Poly& ys, const Poly& top) -> std::optional<Poly> {
    // Points of {top + c = 0} are (xs, ys) as s varies; h must vanish identically there.
    RatFn on = substitute(h, PolyMap(aux, ctx, {RatFn(xs), RatFn(ys)}));
    Poly g(aux);
    for (const auto& k : on.as_poly().coefficients_in(0)) g = poly_gcd(g, k);
    auto roots = rational_roots(g, 1);
    if (roots.roots.empty()) return std::nullopt;
    return (top + roots.roots.front().first).primitive();
  };
  const Poly x = Poly::var(ctx, 0), y = Poly::var(ctx, 1);
  Poly top = h.geo_homogeneous_part(n);
  // Top part y: the line y = -c.
  if (top.eval_var(1, 0).is_zero())
    if (auto f = try_line(s, -cvar, y)) return f;
  // Top part x - r y: the line x = r s - c, y = s.
  auto tops = rational_roots(top.eval_var(1, 1), 0);
  for (const auto& [r, mult] : tops.roots)
    if (auto f = try_line(s * r - cvar, s, x - y * r)) return f;
  return std::nullopt;
}

}  // namespace foliage
