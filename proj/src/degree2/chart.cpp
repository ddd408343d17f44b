#include <algorithm>

#include "foliage/degree2.hpp"
#include "foliage/error.hpp"

namespace foliage {

HomogForm HomogForm::make(const KForm& w) {
  if (w.degree() != 1 || w.ctx()->arity() != 3) throw DomainError("homogeneous form: 1-form in 3 variables expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.is_zero()) throw DomainError("homogeneous form: zero form");
  if (!w.is_homogeneous()) throw DomainError("homogeneous form: coefficients are not homogeneous of one degree");
  if (!is_dicritical(w)) throw DomainError("homogeneous form: not dicritical (i_R ω ≠ 0)");
  Poly g(w.ctx());
  for (const auto& [m, c] : w.coeffs()) g = poly_gcd(g, c.num());
  if (g.has_geometric()) throw DomainError("homogeneous form: coefficients share the factor " + g.to_string());
  return HomogForm(w, w.order());
}

KForm restrict_to_chart(const HomogForm& h, std::size_t chart) {
  const Ctx& ctx = h.omega().ctx();
  if (chart >= 3) throw DomainError("restrict_to_chart: chart index must be 0, 1 or 2");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != chart) names.push_back(ctx->name(i));
  Ctx src = make_ctx(names, ctx->params());
  std::vector<RatFn> im;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) im.emplace_back(i == chart ? Poly(src, 1) : Poly::var(src, k++));
  return pullback(h.omega(), PolyMap(src, ctx, std::move(im)));
}

HomogForm homogenize_affine(const KForm& theta, unsigned nu, std::size_t chart, Ctx target) {
  const Ctx& src = theta.ctx();
  if (theta.degree() != 1 || src->arity() != 2) throw DomainError("homogenize_affine: 1-form in 2 variables expected");
  if (!theta.is_polynomial()) throw NotPolynomial();
  if (chart >= 3) throw DomainError("homogenize_affine: chart index must be 0, 1 or 2");
  if (!target) target = standard_ctx(3, src->params());
  if (target->arity() != 3 || target->params() != src->params()) throw ContextMismatch();
  // Variable map: affine var 0, 1 -> the non-chart slots; parameters shift by one.
  std::vector<std::size_t> vmap;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != chart) vmap.push_back(i);
  for (std::size_t j = 0; j < src->nparams(); ++j) vmap.push_back(3 + j);
  auto homog = [&](const Poly& p) {
    Poly out(target);
    for (const auto& [e, c] : p.terms()) {
      unsigned d = e[0] + e[1];
      if (d > nu) throw DomainError("homogenize_affine: coefficient degree exceeds ν");
      Exponents f{};
      f[vmap[0]] = e[0];
      f[vmap[1]] = e[1];
      f[chart] = static_cast<std::uint16_t>(nu - d);
      for (std::size_t j = 0; j < src->nparams(); ++j) f[3 + j] = e[2 + j];
      out.add_term(f, c);
    }
    return out;
  };
  auto comps = theta.components();
  Poly A = homog(comps[0].num()), B = homog(comps[1].num());
  Poly radial = Poly::var(target, vmap[0]) * A + Poly::var(target, vmap[1]) * B;
  auto C = radial.divide_exact(Poly::var(target, chart));
  if (!C) throw DomainError("homogenize_affine: top-degree part is not a multiple of x dy - y dx");
  std::vector<RatFn> coeffs(3, RatFn(target));
  coeffs[vmap[0]] = A;
  coeffs[vmap[1]] = B;
  coeffs[chart] = -*C;
  return HomogForm::make(KForm::one_form(target, coeffs));
}

namespace {
std::vector<Rat> projective(std::size_t chart, const std::vector<Rat>& c) {
  std::vector<Rat> p;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) p.push_back(i == chart ? Rat(1) : c[k++]);
  Rat lead = *std::find_if(p.begin(), p.end(), [](const Rat& x) { return x != 0; });
  for (auto& x : p) x /= lead;
  return p;
}
}  // namespace

SingularBudget singular_budget_check(const HomogForm& h, std::vector<BudgetPoint> points) {
  if (h.omega().has_params()) throw ParametersPresent();
  SingularBudget out;
  std::vector<std::vector<Rat>> seen;
  for (auto& pt : points) {
    if (pt.chart >= 3 || pt.coords.size() != 2) throw DomainError("budget point needs a chart in 0..2 and two coordinates");
    auto proj = projective(pt.chart, pt.coords);
    if (std::find(seen.begin(), seen.end(), proj) != seen.end())
      throw DomainError("budget point listed twice (same projective point)");
    seen.push_back(proj);
    KForm affine = restrict_to_chart(h, pt.chart);
    for (const auto& c : affine.components()) {
      Poly v = c.num().eval_var(0, pt.coords[0]).eval_var(1, pt.coords[1]);
      if (!v.is_zero()) throw DomainError("budget point is not singular");
    }
    auto mu = milnor_number_at(affine, pt.coords);
    if (!mu) throw DomainError("budget point is not an isolated singularity");
    pt.mu = *mu;
    out.total += pt.mu;
  }
  out.points = std::move(points);
  out.expected = h.nu() * h.nu() - h.nu() + 1;
  out.satisfied = out.total == out.expected;
  return out;
}

}  // namespace foliage
