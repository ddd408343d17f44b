#include "foliage/linsolve.hpp"

#include <map>

#include "foliage/error.hpp"

namespace foliage {

namespace {

bool all_constant(const Matrix& A, const Vec& rhs) {
  for (const auto& row : A)
    for (const auto& e : row)
      if (!e.is_constant()) return false;
  for (const auto& e : rhs)
    if (!e.is_constant()) return false;
  return true;
}

LinSolution solve_rational(const Matrix& A, const Vec& rhs, const Ctx& ctx, std::size_t n) {
  const std::size_t m = A.size();
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j].num().to_rat();
    M[i][n] = rhs[i].num().to_rat();
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rat inv = Rat(1) / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rat f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  LinSolution sol;
  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) {
      sol.consistent = false;
      return sol;
    }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  sol.particular.assign(n, RatFn(ctx));
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = RatFn(ctx, M[k][n]);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, RatFn(ctx));
    v[f] = RatFn(ctx, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = RatFn(ctx, -M[k][f]);
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

// Fraction-free echelon form followed by back substitution in the fraction field.
LinSolution solve_bareiss(const Matrix& A, const Vec& rhs, const Ctx& ctx, std::size_t n) {
  const std::size_t m = A.size();
  std::vector<std::vector<Poly>> M(m, std::vector<Poly>(n + 1, Poly(ctx)));
  for (std::size_t i = 0; i < m; ++i) {
    Poly l(ctx, 1);
    for (std::size_t j = 0; j < n; ++j) l = poly_lcm(l, A[i][j].den());
    l = poly_lcm(l, rhs[i].den());
    auto entry = [&](const RatFn& e) { return *(e.num() * l).divide_exact(e.den()); };
    for (std::size_t j = 0; j < n; ++j) M[i][j] = entry(A[i][j]);
    M[i][n] = entry(rhs[i]);
  }
  Poly prev(ctx, 1);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    // Prefer a constant pivot to keep exclusions small.
    for (std::size_t i = r; i < m; ++i) {
      if (M[i][c].is_zero()) continue;
      if (p == r && M[r][c].is_zero()) p = i;
      if (M[i][c].is_constant()) {
        p = i;
        break;
      }
    }
    if (M[p][c].is_zero()) continue;
    std::swap(M[p], M[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        Poly t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        auto q = t.divide_exact(prev);
        if (!q) throw Error("internal: Bareiss division not exact");
        M[i][j] = std::move(*q);
      }
      M[i][c] = Poly(ctx);
    }
    prev = M[r][c];
    pivots.push_back(c);
    ++r;
  }
  LinSolution sol;
  for (std::size_t i = r; i < m; ++i)
    if (!M[i][n].is_zero()) {
      sol.consistent = false;
      return sol;
    }
  for (std::size_t k = 0; k < r; ++k) {
    const Poly& pv = M[k][pivots[k]];
    if (pv.is_constant()) continue;
    Poly e = pv.primitive();
    bool dup = false;
    for (const auto& x : sol.exclusions) dup = dup || x == e;
    if (!dup) sol.exclusions.push_back(e);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  auto back_sub = [&](Vec x, bool with_rhs) {
    for (std::size_t k = r; k-- > 0;) {
      std::size_t pc = pivots[k];
      RatFn s = with_rhs ? RatFn(M[k][n]) : RatFn(ctx);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (!M[k][j].is_zero() && !x[j].is_zero()) s -= RatFn(M[k][j]) * x[j];
      x[pc] = s / RatFn(M[k][pc]);
    }
    return x;
  };
  sol.particular = back_sub(Vec(n, RatFn(ctx)), true);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, RatFn(ctx));
    v[f] = RatFn(ctx, 1);
    sol.basis.push_back(back_sub(std::move(v), false));
  }
  return sol;
}

}  // namespace

LinSolution linear_solve(const Matrix& A, const Vec& rhs) {
  if (A.size() != rhs.size()) throw DomainError("linear_solve: row count differs from rhs length");
  if (A.empty()) throw DomainError("linear_solve: empty system");
  const std::size_t n = A[0].size();
  const Ctx ctx = rhs[0].ctx();
  for (const auto& row : A) {
    if (row.size() != n) throw DomainError("linear_solve: ragged matrix");
    for (const auto& e : row) require_same(e.ctx(), ctx);
  }
  for (const auto& e : rhs) require_same(e.ctx(), ctx);
  if (all_constant(A, rhs)) return solve_rational(A, rhs, ctx, n);
  return solve_bareiss(A, rhs, ctx, n);
}

std::vector<std::vector<Rat>> rational_kernel(std::vector<SparseRow> rows, std::size_t ncols) {
  // pivot column -> normalized row (pivot entry 1, stored without the pivot)
  std::map<std::size_t, std::map<std::size_t, Rat>> piv;
  for (auto& raw : rows) {
    std::map<std::size_t, Rat> row;
    for (auto& [c, v] : raw)
      if (v != 0) row[c] += v;
    auto it = row.begin();
    while (it != row.end()) {
      if (it->second == 0) {
        it = row.erase(it);
        continue;
      }
      auto p = piv.find(it->first);
      if (p == piv.end()) {
        ++it;
        continue;
      }
      // Pivot rows only hold columns right of their pivot.
      const Rat f = it->second;
      const std::size_t col = it->first;
      row.erase(it);
      for (const auto& [c, v] : p->second) row[c] -= f * v;
      it = row.upper_bound(col);
    }
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    if (row.empty()) continue;
    std::size_t pc = row.begin()->first;
    Rat inv = Rat(1) / row.begin()->second;
    row.erase(row.begin());
    for (auto& [c, v] : row) v *= inv;
    piv.emplace(pc, std::move(row));
  }
  // Back substitution to reduced form, highest pivot first.
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const std::size_t pc = it->first;
    for (auto jt = std::next(it); jt != piv.rend(); ++jt) {
      auto hit = jt->second.find(pc);
      if (hit == jt->second.end()) continue;
      Rat f = hit->second;
      jt->second.erase(hit);
      for (const auto& [c, v] : it->second) {
        auto& slot = jt->second[c];
        slot -= f * v;
        if (slot == 0) jt->second.erase(c);
      }
    }
  }
  std::vector<std::vector<Rat>> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (piv.count(f)) continue;
    std::vector<Rat> v(ncols);
    v[f] = 1;
    for (const auto& [pc, row] : piv) {
      auto hit = row.find(f);
      if (hit != row.end()) v[pc] = -hit->second;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<std::vector<Rat>> span_basis(std::vector<std::vector<Rat>> vs) {
  if (vs.empty()) return vs;
  const std::size_t n = vs[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < vs.size(); ++c) {
    std::size_t p = r;
    while (p < vs.size() && vs[p][c] == 0) ++p;
    if (p == vs.size()) continue;
    std::swap(vs[p], vs[r]);
    Rat inv = Rat(1) / vs[r][c];
    for (auto& x : vs[r]) x *= inv;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == r || vs[i][c] == 0) continue;
      Rat f = vs[i][c];
      for (std::size_t j = c; j < n; ++j) vs[i][j] -= f * vs[r][j];
    }
    ++r;
  }
  vs.resize(r);
  return vs;
}

std::vector<Vec> span_basis(std::vector<Vec> vs) {
  if (vs.empty()) return vs;
  const std::size_t n = vs[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < vs.size(); ++c) {
    std::size_t p = r;
    while (p < vs.size() && vs[p][c].is_zero()) ++p;
    if (p == vs.size()) continue;
    std::swap(vs[p], vs[r]);
    RatFn inv = RatFn(vs[r][c].ctx(), 1) / vs[r][c];
    for (auto& x : vs[r]) x = x * inv;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == r || vs[i][c].is_zero()) continue;
      RatFn f = vs[i][c];
      for (std::size_t j = c; j < n; ++j) vs[i][j] -= f * vs[r][j];
    }
    ++r;
  }
  vs.resize(r);
  return vs;
}

}  // namespace foliage
