#include <algorithm>

#include "foliage/error.hpp"
#include "foliage/poly.hpp"

namespace foliage {

namespace {

Poly one(const Ctx& ctx) { return Poly(ctx, 1); }

Poly lead_in(const Poly& p, std::size_t v) {
  auto cs = p.coefficients_in(v);
  return cs.back();
}

Poly var_power(const Ctx& ctx, std::size_t v, unsigned k) {
  Exponents e{};
  e[v] = static_cast<std::uint16_t>(k);
  return Poly::monomial(ctx, e);
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

// lc(B)^(degA-degB+1) * A mod B, as polynomials in v.
Poly prem(const Poly& A, const Poly& B, std::size_t v) {
  unsigned da = A.degree_in(v), db = B.degree_in(v);
  Poly lb = lead_in(B, v);
  Poly r = A;
  int e = static_cast<int>(da) - static_cast<int>(db) + 1;
  while (!r.is_zero() && r.involves(v) && r.degree_in(v) >= db) {
    unsigned dr = r.degree_in(v);
    Poly lr = lead_in(r, v);
    r = lb * r - lr * B * var_power(A.ctx(), v, dr - db);
    --e;
  }
  if (e > 0) r = lb.pow(static_cast<unsigned>(e)) * r;
  return r;
}

Poly gcd_rec(const Poly& p, const Poly& q);

Poly content_in(const Poly& p, std::size_t v) {
  auto cs = p.coefficients_in(v);
  Poly g(p.ctx());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return one(p.ctx());
  }
  return g.primitive();
}

// Subresultant PRS; A and B primitive in v and both involving v.
Poly prs_gcd(Poly A, Poly B, std::size_t v) {
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  const Ctx& ctx = A.ctx();
  Poly g = one(ctx), h = one(ctx);
  for (;;) {
    unsigned delta = A.degree_in(v) - B.degree_in(v);
    Poly R = prem(A, B, v);
    if (R.is_zero()) return exact(B, content_in(B, v)).primitive();
    if (!R.involves(v)) return one(ctx);
    A = B;
    B = exact(R, g * h.pow(delta));
    g = lead_in(A, v);
    if (delta == 0) continue;
    h = exact(g.pow(delta), h.pow(delta - 1));
  }
}

Poly gcd_rec(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.primitive();
  if (q.is_zero()) return p.primitive();
  if (p.is_constant() || q.is_constant()) return one(p.ctx());
  const std::size_t n = p.ctx()->total();
  for (std::size_t v = 0; v < n; ++v) {
    bool ip = p.involves(v), iq = q.involves(v);
    if (ip && !iq) return gcd_rec(content_in(p, v), q);
    if (iq && !ip) return gcd_rec(p, content_in(q, v));
  }
  std::size_t best = n;
  unsigned best_deg = ~0u;
  for (std::size_t v = 0; v < n; ++v) {
    if (!p.involves(v)) continue;
    unsigned d = std::max(p.degree_in(v), q.degree_in(v));
    if (d < best_deg) {
      best_deg = d;
      best = v;
    }
  }
  Poly cp = content_in(p, best), cq = content_in(q, best);
  Poly c = gcd_rec(cp, cq);
  Poly g = prs_gcd(exact(p, cp), exact(q, cq), best);
  return (c * g).primitive();
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
  require_same(p.ctx(), q.ctx());
  return gcd_rec(p, q);
}

Poly poly_lcm(const Poly& p, const Poly& q) {
  require_same(p.ctx(), q.ctx());
  if (p.is_zero() || q.is_zero()) return Poly(p.ctx());
  return exact(p * q, poly_gcd(p, q)).primitive();
}

namespace {
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  const Ctx ctx = m.empty() ? nullptr : m[0][0].ctx();
  Poly prev = one(ctx);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly(ctx);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly(ctx);
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}
}  // namespace

Poly resultant(const Poly& p, const Poly& q, std::size_t v) {
  require_same(p.ctx(), q.ctx());
  auto a = p.coefficients_in(v), b = q.coefficients_in(v);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  if (m + n == 0) return one(p.ctx());
  std::vector<std::vector<Poly>> s(m + n, std::vector<Poly>(m + n, Poly(p.ctx())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return bareiss_det(std::move(s));
}

namespace {
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}
}  // namespace

RationalRoots rational_roots(const Poly& p, std::size_t v) {
  for (std::size_t u = 0; u < p.ctx()->total(); ++u)
    if (u != v && p.involves(u)) throw DomainError("rational_roots: polynomial must be univariate");
  RationalRoots out;
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  Poly r = p.primitive();
  unsigned z = r.valuation_in(v);
  if (z) {
    out.roots.emplace_back(Rat(0), z);
    r = r.shift_down(v, z);
  }
  const Ctx& ctx = p.ctx();
  Poly x = Poly::var(ctx, v);
  while (r.involves(v)) {
    auto cs = r.primitive().coefficients_in(v);
    Int a0 = cs.front().to_rat().get_num(), an = cs.back().to_rat().get_num();
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rat cand(num * s, den);
          cand.canonicalize();
          if (!r.eval_var(v, cand).is_zero()) continue;
          unsigned mult = 0;
          Poly lin = x - Poly(ctx, cand);
          while (auto q = r.divide_exact(lin)) {
            r = *q;
            ++mult;
            if (!r.involves(v)) break;
          }
          out.roots.emplace_back(cand, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.remaining_degree = r.involves(v) ? r.degree_in(v) : 0;
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace foliage
