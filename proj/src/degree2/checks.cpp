#include "foliage/degree2.hpp"
#include "foliage/error.hpp"

namespace foliage {

bool invariant_curve_check(const KForm& theta, const Poly& C) {
  require_same(theta.ctx(), C.ctx());
  if (C.is_zero()) throw DomainError("invariant_curve_check: zero curve");
  if (theta.degree() != 1) throw DomainError("invariant_curve_check: 1-form expected");
  Poly den(C.ctx(), 1);
  for (const auto& [m, c] : theta.coeffs()) den = poly_lcm(den, c.den());
  KForm w = wedge(RatFn(den) * theta, differential(RatFn(C)));
  for (const auto& [m, c] : w.coeffs())
    if (!c.as_poly().divide_exact(C)) return false;
  return true;
}

bool transversely_affine_check(const KForm& w, const KForm& w1) {
  require_same(w.ctx(), w1.ctx());
  if (w.degree() != 1 || w1.degree() != 1) throw DomainError("transversely_affine_check: 1-forms expected");
  return is_closed(w1) && exterior_derivative(w) == wedge(w, w1);
}

bool sl2_triplet_check(const KForm& w0, const KForm& w1, const KForm& w2) {
  require_same(w0.ctx(), w1.ctx());
  require_same(w0.ctx(), w2.ctx());
  for (const auto* w : {&w0, &w1, &w2})
    if (w->degree() != 1) throw DomainError("sl2_triplet_check: 1-forms expected");
  return exterior_derivative(w0) == wedge(w0, w1) && exterior_derivative(w1) == wedge(w0, w2) &&
         exterior_derivative(w2) == wedge(w1, w2);
}

KForm log_form_build(const std::vector<RatFn>& lambda, const std::vector<Poly>& f, const Poly& H,
                     const std::vector<unsigned>& n) {
  if (f.empty()) throw DomainError("log_form_build: at least one polynomial");
  if (lambda.size() != f.size() || n.size() != f.size())
    throw DomainError("log_form_build: λ, f and n must have equal lengths");
  const Ctx& ctx = f[0].ctx();
  require_same(ctx, H.ctx());
  for (std::size_t i = 0; i < f.size(); ++i) {
    require_same(ctx, f[i].ctx());
    if (lambda[i].has_geometric()) throw DomainError("log_form_build: residues must be constants");
    if (!f[i].has_geometric()) throw DomainError("log_form_build: f_i must be nonconstant");
    for (std::size_t j = 0; j < i; ++j)
      if (poly_gcd(f[i], f[j]).has_geometric())
        throw DomainError("log_form_build: f_" + std::to_string(j + 1) + " and f_" + std::to_string(i + 1) +
                          " share a factor");
  }
  KForm eta(ctx, 1);
  Poly den(ctx, 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    eta += (lambda[i] / RatFn(f[i])) * differential(RatFn(f[i]));
    den = den * f[i].pow(n[i]);
  }
  if (!H.is_zero()) eta += differential(RatFn(H, den));
  if (ctx->arity() > 1 && !is_closed(eta)) throw Error("internal: logarithmic form is not closed");
  return eta;
}

}  // namespace foliage
