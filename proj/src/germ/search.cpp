#include <algorithm>
#include <map>
#include <tuple>

#include "foliage/error.hpp"
#include "foliage/germ.hpp"

namespace foliage {

namespace {

enum class Kind { FirstIntegral, IntegratingFactor };

// Geometric monomials of degree lo..hi, by degree, then leading-first within a degree.
std::vector<Exponents> monomials(std::size_t n, unsigned lo, unsigned hi) {
  std::vector<Exponents> out;
  for (unsigned d = lo; d <= hi; ++d) {
    std::vector<Exponents> level;
    Exponents e{};
    // Enumerate compositions of d into n parts.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == n) {
        e[i] = static_cast<std::uint16_t>(left);
        level.push_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = static_cast<std::uint16_t>(k);
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct RowKey {
  IndexMask mask;
  Exponents geo;
  bool operator<(const RowKey& o) const { return mask != o.mask ? mask < o.mask : geo < o.geo; }
};

struct Problem {
  const KForm& w;
  Kind kind;
  unsigned nu;
  unsigned lo;  // lowest unknown degree
  std::vector<Exponents> cols;
  std::size_t param_count;
};

KForm image(const Problem& pb, const KForm& dw, const Exponents& m) {
  const Ctx& ctx = pb.w.ctx();
  Poly mono = Poly::monomial(ctx, m);
  KForm r = wedge(pb.w, differential(RatFn(mono)));
  if (pb.kind == Kind::IntegratingFactor && !dw.is_zero()) r += RatFn(mono) * dw;
  return r;
}

// Splits coefficient polynomial terms by geometric exponent: geo -> parameter polynomial.
std::map<Exponents, Poly> split_geo(const Poly& p, unsigned max_deg) {
  const Ctx& ctx = p.ctx();
  const std::size_t n = ctx->arity();
  std::map<Exponents, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents g{}, par{};
    unsigned deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = e[i];
      deg += e[i];
    }
    if (deg > max_deg) continue;
    for (std::size_t i = n; i < ctx->total(); ++i) par[i] = e[i];
    out.try_emplace(g, ctx).first->second.add_term(par, c);
  }
  return out;
}

// Kernel of the order-M system, as coefficient vectors over the columns.
std::vector<Vec> solve_order(const Problem& pb, unsigned M, std::vector<Poly>& exclusions) {
  const Ctx& ctx = pb.w.ctx();
  KForm dw = pb.kind == Kind::IntegratingFactor ? exterior_derivative(pb.w) : KForm(ctx, 2);
  const unsigned max_deg = M + pb.nu - 1;
  std::map<RowKey, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Poly>>> entries;
  for (std::size_t j = 0; j < pb.cols.size(); ++j) {
    const KForm img = image(pb, dw, pb.cols[j]);
    for (const auto& [mask, c] : img.coeffs()) {
      for (auto& [g, par] : split_geo(c.num(), max_deg)) {
        auto [it, fresh] = rows.try_emplace(RowKey{mask, g}, entries.size());
        if (fresh) entries.emplace_back();
        entries[it->second].emplace_back(j, par);
      }
    }
  }
  const std::size_t ncols = pb.cols.size();
  std::vector<Vec> kernel;
  if (pb.param_count == 0) {
    std::vector<SparseRow> sparse;
    for (auto& row : entries) {
      SparseRow r;
      for (auto& [j, p] : row) r.emplace_back(j, p.to_rat());
      sparse.push_back(std::move(r));
    }
    for (auto& v : rational_kernel(std::move(sparse), ncols)) {
      Vec k;
      for (auto& x : v) k.emplace_back(ctx, x);
      kernel.push_back(std::move(k));
    }
    return kernel;
  }
  if (entries.empty()) {
    for (std::size_t j = 0; j < ncols; ++j) {
      Vec v(ncols, RatFn(ctx));
      v[j] = RatFn(ctx, 1);
      kernel.push_back(std::move(v));
    }
    return kernel;
  }
  Matrix A(entries.size(), Vec(ncols, RatFn(ctx)));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (auto& [j, p] : entries[i]) A[i][j] = RatFn(p);
  auto sol = linear_solve(A, Vec(entries.size(), RatFn(ctx)));
  for (auto& e : sol.exclusions) {
    bool dup = false;
    for (auto& x : exclusions) dup = dup || x == e;
    if (!dup) exclusions.push_back(e);
  }
  return sol.basis;
}

Poly to_poly(const Ctx& ctx, const std::vector<Exponents>& cols, const Vec& v) {
  Poly den(ctx, 1);
  for (const auto& c : v) den = poly_lcm(den, c.den());
  Poly f(ctx);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    Poly scale = *(den.divide_exact(v[j].den()));
    f += v[j].num() * scale * Poly::monomial(ctx, cols[j]);
  }
  return f;
}

// N-jets of the solutions at order M, as a reduced echelon basis.
std::vector<Poly> stable_basis(Problem& pb, unsigned N, unsigned M, std::vector<Poly>& exclusions) {
  const Ctx& ctx = pb.w.ctx();
  pb.cols = monomials(ctx->arity(), pb.lo, M);
  auto kernel = solve_order(pb, M, exclusions);
  std::size_t keep = 0;
  while (keep < pb.cols.size() && total_degree(pb.cols[keep]) <= N) ++keep;
  for (auto& v : kernel) v.erase(v.begin() + static_cast<std::ptrdiff_t>(keep), v.end());
  auto basis = span_basis(std::move(kernel));
  std::vector<Poly> out;
  for (const auto& v : basis) out.push_back(to_poly(ctx, pb.cols, v));
  return out;
}

FactorShape shape_of(const Poly& f) {
  const Ctx& ctx = f.ctx();
  FactorShape s{f.valuation_in(0), std::nullopt, RatFn(ctx)};
  Poly g = f.shift_down(0, s.k);
  Poly g0 = g.eval_var(0, 0);
  for (std::size_t i = 2; i < ctx->arity(); ++i) g0 = g0.eval_var(i, 0);
  Poly slope = g.derivative(0);
  for (std::size_t i = 1; i < ctx->arity(); ++i) slope = slope.eval_var(i, 0);
  slope = slope.eval_var(0, 0);
  if (g0.is_zero()) {
    s.dg_dx1_at_0 = RatFn(slope);
    return s;
  }
  // Normalize g so that its leading x2-coefficient on x1 = 0 is 1.
  unsigned l = g0.valuation_in(1);
  s.l = l;
  Poly lead = g0.coefficients_in(1)[l];
  s.dg_dx1_at_0 = RatFn(slope) / RatFn(lead);
  return s;
}

SeriesSearch run_search(const KForm& w, unsigned N, const SearchOptions& opt, Kind kind) {
  if (w.degree() != 1) throw DomainError("series search: 1-form expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.ctx()->arity() > 3) throw DomainError("series search: at most 3 variables");
  if (N == 0) throw DomainError("series search: order must be positive");
  if (N > opt.cap) throw DomainError("series search: order exceeds the configured cap");
  if (w.is_zero()) throw DomainError("series search: zero form");
  std::size_t used_params = 0;
  for (std::size_t p = w.ctx()->arity(); p < w.ctx()->total(); ++p) {
    bool used = false;
    for (const auto& [m, c] : w.coeffs()) used = used || c.num().involves(p);
    used_params += used;
  }
  if (used_params > 1) throw DomainError("series search: at most one parameter");
  Problem pb{w, kind, w.order(), kind == Kind::FirstIntegral ? 1u : 0u, {}, used_params};
  // With an explicit margin the solve order is fixed. Otherwise it grows by d until the
  // projected basis stops changing, which absorbs weighted-homogeneous tails.
  auto solve = [&](unsigned d, std::vector<Poly>& excl) -> std::pair<std::vector<Poly>, unsigned> {
    if (opt.margin) return {stable_basis(pb, d, d + *opt.margin, excl), d + *opt.margin};
    unsigned M = 2 * d;
    auto basis = stable_basis(pb, d, M, excl);
    while (M + d <= std::max(4 * d, d + 4)) {
      auto next = stable_basis(pb, d, M + d, excl);
      M += d;
      if (next == basis) break;
      basis = std::move(next);
    }
    return {basis, M};
  };
  SeriesSearch res;
  res.order = N;
  std::tie(res.basis, res.solved_order) = solve(N, res.exclusions);
  if (res.basis.empty()) {
    for (unsigned d = 1; d <= N; ++d) {
      std::vector<Poly> scratch;
      if (solve(d, scratch).first.empty()) {
        res.obstruction_degree = d;
        break;
      }
    }
  }
  if (kind == Kind::IntegratingFactor && w.ctx()->arity() >= 2)
    for (const auto& f : res.basis) res.shapes.push_back(shape_of(f));
  return res;
}

}  // namespace

SeriesSearch first_integral_search(const KForm& w, unsigned N, const SearchOptions& opt) {
  return run_search(w, N, opt, Kind::FirstIntegral);
}

SeriesSearch integrating_factor_search(const KForm& w, unsigned N, const SearchOptions& opt) {
  return run_search(w, N, opt, Kind::IntegratingFactor);
}

CenterResult is_center_to_order(const KForm& w, unsigned N, const SearchOptions& opt) {
  if (w.ctx()->arity() != 2) throw DomainError("center test: 2 variables expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  for (const auto& c : w.components())
    if (!c.num().geo_homogeneous_part(0).is_zero())
      throw DomainError("center test: form is nonsingular at the origin");
  auto res = first_integral_search(w, std::max(N, 2u), opt);
  const Ctx& ctx = w.ctx();
  auto morse = [&](const Poly& f) {
    Poly q = f.geo_homogeneous_part(2);
    Exponents e20{}, e11{}, e02{};
    e20[0] = 2;
    e11[0] = e11[1] = 1;
    e02[1] = 2;
    auto coef = [&](const Exponents& e) {
      Poly c(ctx);
      for (const auto& [m, v] : q.terms()) {
        if (m[0] != e[0] || m[1] != e[1]) continue;
        Exponents par = m;
        par[0] = par[1] = 0;
        c.add_term(par, v);
      }
      return c;
    };
    Poly a = coef(e20), b = coef(e11), c = coef(e02);
    return !(a * c * Rat(4) - b * b).is_zero();
  };
  std::vector<Poly> candidates = res.basis;
  for (unsigned t = 2; t <= 4 && res.basis.size() > 1; ++t) {
    Poly s(ctx);
    Rat w_t = 1;
    for (const auto& f : res.basis) {
      s += f * w_t;
      w_t *= t;
    }
    candidates.push_back(s);
  }
  for (const auto& f : candidates)
    if (morse(f)) return {true, f};
  return {false, std::nullopt};
}

}  // namespace foliage
