#include "foliage/error.hpp"
#include "foliage/germ.hpp"

namespace foliage {

std::string to_string(const Milnor& m) { return m ? std::to_string(*m) : "INFINITE"; }

namespace {

// Leading data of F(x, 0): degree and leading coefficient (degree 0 also for the zero polynomial).
std::pair<unsigned, Rat> on_axis(const Poly& f) {
  Poly r = f.eval_var(1, 0);
  if (r.is_zero()) return {0, 0};
  return {r.degree_in(0), r.leading_coeff()};
}

}  // namespace

Milnor intersection_multiplicity(const Poly& f0, const Poly& g0) {
  const Ctx& ctx = f0.ctx();
  require_same(ctx, g0.ctx());
  if (ctx->arity() != 2) throw DomainError("intersection multiplicity needs two variables");
  if (f0.has_params() || g0.has_params()) throw ParametersPresent();
  if (f0.is_zero() && g0.is_zero()) return std::nullopt;
  if (f0.constant_term() != 0 || g0.constant_term() != 0) return 0u;
  if (f0.is_zero() || g0.is_zero()) return std::nullopt;

  Poly F = f0, G = g0;
  Poly h = poly_gcd(F, G);
  if (!h.is_constant()) {
    if (h.constant_term() == 0) return std::nullopt;
    // A common factor that is a unit at the origin does not change the local ideal.
    F = *F.divide_exact(h);
    G = *G.divide_exact(h);
  }
  unsigned total = 0;
  for (;;) {
    if (F.constant_term() != 0 || G.constant_term() != 0) return total;
    auto [r, lf] = on_axis(F);
    auto [s, lg] = on_axis(G);
    if (r > s) {
      std::swap(F, G);
      std::swap(r, s);
      std::swap(lf, lg);
    }
    if (r == 0) {
      // F(x,0) ≡ 0, so F = y·H and I(F,G) = I(y,G) + I(H,G) with I(y,G) = ord_x G(x,0).
      Poly gx = G.eval_var(1, 0);
      if (gx.is_zero()) throw Error("internal: common factor y survived gcd removal");
      total += gx.valuation_in(0);
      F = F.shift_down(1, 1);
      continue;
    }
    Exponents e{};
    e[0] = static_cast<std::uint16_t>(s - r);
    G = G * lf - F * Poly::monomial(ctx, e, lg);
  }
}

Milnor milnor_number(const KForm& w) {
  if (w.degree() != 1 || w.ctx()->arity() != 2) throw DomainError("milnor_number: 1-form in 2 variables expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.has_params()) throw ParametersPresent();
  auto c = w.components();
  return intersection_multiplicity(c[0].num(), c[1].num());
}

Milnor milnor_number_at(const KForm& w, const std::vector<Rat>& point) {
  const Ctx& ctx = w.ctx();
  if (point.size() != ctx->arity()) throw DomainError("point dimension mismatch");
  std::vector<RatFn> im;
  for (std::size_t i = 0; i < ctx->arity(); ++i) im.emplace_back(Poly::var(ctx, i) + point[i]);
  return milnor_number(pullback(w, PolyMap(ctx, ctx, std::move(im))));
}

}  // namespace foliage
