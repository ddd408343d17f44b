#include "foliage/error.hpp"
#include "foliage/germ.hpp"

namespace foliage {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FirstIntegral: return "FIRST_INTEGRAL";
    case Verdict::IntegratingFactor: return "INTEGRATING_FACTOR";
    case Verdict::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

namespace {
Poly eval_series(const Series& s, const Poly& f) {
  Poly r(f.ctx());
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) r = r * f + Poly(f.ctx(), *it);
  return r;
}
}  // namespace

KForm loray_form(const LorayData& data, std::optional<unsigned> max_degree) {
  const Poly& f = data.f;
  const Ctx& ctx = f.ctx();
  if (ctx->arity() < 2) throw DomainError("loray_form: at least two variables");
  if (f.involves(0)) throw DomainError("loray_form: f must not involve x1");
  if (f.is_zero() || f.constant_term() != 0) throw DomainError("loray_form: f(0) must vanish and f must be nonzero");
  for (const auto* s : {&data.l1, &data.l2})
    if (s->coeffs.size() > s->order) throw DomainError("loray_form: more coefficients than the recorded order");
  const Poly x1 = Poly::var(ctx, 0);
  if (max_degree) {
    const unsigned v = f.geo_order(), D = *max_degree;
    // l1_j f^j df starts in degree (j+1)v-1, x1 l2_j f^j df in degree (j+1)v.
    if ((data.l1.order + 1) * v <= D + 1 || (data.l2.order + 1) * v <= D)
      throw DomainError("loray_form: truncation too small for the requested degree");
  }
  KForm w = RatFn(x1) * KForm::dx(ctx, 0);
  Poly coef = eval_series(data.l1, f) + x1 * eval_series(data.l2, f);
  w += RatFn(coef) * differential(RatFn(f));
  return max_degree ? w.truncate(*max_degree) : w;
}

DeploymentOutcome deployment_outcomes(unsigned mu, bool lambda_nonzero) {
  if (mu < 2) throw DomainError("deployment_outcomes: mu >= 2 required");
  DeploymentOutcome out{mu, {}};
  const unsigned n = mu + 1;
  for (unsigned k = n; k >= 2; --k) {
    if (n % k) continue;
    unsigned p = n / k - 1;
    Verdict v = p == 0 ? Verdict::FirstIntegral
                : p == 1 || lambda_nonzero ? Verdict::IntegratingFactor
                                           : Verdict::Unresolved;
    out.cases.push_back({k, p, v});
  }
  return out;
}

}  // namespace foliage
