#include "foliage/blowup.hpp"

#include <algorithm>

#include "foliage/error.hpp"

namespace foliage {

BlowupChart blowup_chart(const Ctx& ctx, std::size_t index) {
  const std::size_t n = ctx->arity();
  if (n != 2 && n != 3) throw DomainError("blowup_chart: dimension 2 or 3 expected");
  if (index >= n) throw DomainError("blowup_chart: chart index out of range");
  const Poly xi = Poly::var(ctx, index);
  std::vector<RatFn> im;
  for (std::size_t j = 0; j < n; ++j) im.emplace_back(j == index ? xi : xi * Poly::var(ctx, j));
  return {PolyMap(ctx, ctx, std::move(im)), index};
}

BlowupChart blowup_chart(unsigned dim, std::size_t index) { return blowup_chart(standard_ctx(dim), index); }

namespace {

// Largest k with x_v^k dividing every coefficient, and the quotient.
std::pair<unsigned, KForm> strip(const KForm& w, std::size_t v) {
  unsigned k = ~0u;
  for (const auto& [mask, c] : w.coeffs()) k = std::min(k, c.as_poly().valuation_in(v));
  if (w.is_zero()) k = 0;
  KForm r(w.ctx(), w.degree());
  for (const auto& [mask, c] : w.coeffs()) r.set(mask, RatFn(c.num().shift_down(v, k)));
  return {k, r};
}

}  // namespace

StrictTransform strict_transform(const KForm& w, const BlowupChart& chart) {
  if (w.degree() != 1) throw DomainError("strict_transform: 1-form expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  require_same(w.ctx(), chart.map.target);
  if (w.is_zero()) throw DomainError("strict_transform: zero form");
  bool nonsingular = false;
  for (const auto& c : w.components()) nonsingular = nonsingular || !c.num().geo_homogeneous_part(0).is_zero();
  auto [m, form] = strip(pullback(w, chart.map), chart.divisor_var);
  bool invariant = true;
  for (const auto& [mask, c] : form.coeffs()) {
    if (mask == mask_of({chart.divisor_var})) continue;
    if (!c.num().eval_var(chart.divisor_var, 0).is_zero()) invariant = false;
  }
  return {m, form, invariant, chart.divisor_var, nonsingular};
}

WeightedResult weighted_substitute(const KForm& w, std::size_t var, std::size_t other, unsigned weight) {
  const Ctx& ctx = w.ctx();
  if (var >= ctx->arity() || other >= ctx->arity() || var == other)
    throw DomainError("weighted_substitute: need two distinct geometric variables");
  if (weight < 1) throw DomainError("weighted_substitute: weight must be at least 1");
  if (!w.is_polynomial()) throw NotPolynomial();
  auto names = ctx->geometric();
  std::string s = "s";
  while (ctx->index_of(s)) s += "'";
  names[var] = s;
  Ctx src = make_ctx(names, ctx->params());
  std::vector<RatFn> im;
  for (std::size_t j = 0; j < ctx->arity(); ++j) {
    Poly xj = Poly::var(src, j);
    im.emplace_back(j == var ? xj * Poly::var(src, other).pow(weight) : xj);
  }
  auto [m, form] = strip(pullback(w, PolyMap(src, ctx, std::move(im))), other);
  return {m, form};
}

DivisorPoints divisor_singular_points(const StrictTransform& st) {
  const KForm& w = st.form;
  if (w.ctx()->arity() != 2) throw DomainError("divisor_singular_points: 2 variables expected");
  if (w.has_params()) throw ParametersPresent();
  const std::size_t d = st.divisor_var, t = 1 - d;
  auto comps = w.components();
  Poly a = comps[d].as_poly().eval_var(d, 0), b = comps[t].as_poly().eval_var(d, 0);
  Poly g = poly_gcd(a, b);
  if (a.is_zero() && b.is_zero()) throw DomainError("divisor_singular_points: form vanishes along the divisor");
  if (g.is_constant()) return {{}, true};
  auto roots = rational_roots(g, t);
  return {roots.roots, roots.remaining_degree == 0};
}

}  // namespace foliage
