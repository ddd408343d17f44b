#include "foliage/poly.hpp"

#include <algorithm>
#include <sstream>

#include "foliage/error.hpp"

namespace foliage {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, earlier variables heavier
}

Poly::Poly(Ctx ctx, const Rat& c) : ctx_(std::move(ctx)) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(const Ctx& ctx, std::size_t v) {
  if (v >= ctx->total()) throw DomainError("variable index out of range");
  Exponents e{};
  e[v] = 1;
  return monomial(ctx, e);
}

Poly Poly::monomial(const Ctx& ctx, const Exponents& e, const Rat& c) {
  Poly p(ctx);
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && foliage::total_degree(terms_.begin()->first) == 0);
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::to_rat() const {
  if (!is_constant()) throw DomainError("expected a constant, got " + to_string());
  return constant_term();
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : foliage::total_degree(terms_.begin()->first);
}

unsigned Poly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
  return d;
}

namespace {
unsigned geo_deg(const Exponents& e, std::size_t arity) {
  unsigned d = 0;
  for (std::size_t i = 0; i < arity; ++i) d += e[i];
  return d;
}
}  // namespace

unsigned Poly::geo_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, geo_deg(e, ctx_->arity()));
  return d;
}

unsigned Poly::geo_order() const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& [e, c] : terms_) d = std::min(d, geo_deg(e, ctx_->arity()));
  return d;
}

bool Poly::geo_homogeneous() const { return is_zero() || geo_order() == geo_degree(); }

Poly Poly::geo_homogeneous_part(unsigned d) const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_)
    if (geo_deg(e, ctx_->arity()) == d) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Poly Poly::geo_truncate(unsigned max_degree) const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_)
    if (geo_deg(e, ctx_->arity()) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

bool Poly::has_geometric() const {
  for (const auto& [e, c] : terms_)
    if (geo_deg(e, ctx_->arity()) > 0) return true;
  return false;
}

bool Poly::has_params() const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = ctx_->arity(); i < ctx_->total(); ++i)
      if (e[i]) return true;
  return false;
}

bool Poly::involves(std::size_t v) const {
  for (const auto& [e, c] : terms_)
    if (e[v]) return true;
  return false;
}

std::vector<Poly> Poly::coefficients_in(std::size_t v) const {
  std::vector<Poly> out(degree_in(v) + 1, Poly(ctx_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[v] = 0;
    out[e[v]].add_term(f, c);
  }
  return out;
}

unsigned Poly::valuation_in(std::size_t v) const {
  if (terms_.empty()) return 0;
  unsigned k = ~0u;
  for (const auto& [e, c] : terms_) k = std::min<unsigned>(k, e[v]);
  return k;
}

Poly Poly::shift_down(std::size_t v, unsigned k) const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[v] < k) throw DomainError("shift_down: not divisible");
    Exponents f = e;
    f[v] = static_cast<std::uint16_t>(f[v] - k);
    r.terms_.emplace(f, c);
  }
  return r;
}

Poly Poly::derivative(std::size_t v) const {
  Poly r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (!e[v]) continue;
    Exponents f = e;
    f[v] -= 1;
    r.add_term(f, c * e[v]);
  }
  return r;
}

Poly Poly::eval_var(std::size_t v, const Rat& value) const {
  return substitute_var(v, Poly(ctx_, value));
}

Poly Poly::substitute_var(std::size_t v, const Poly& value) const {
  require_same(ctx_, value.ctx_);
  auto coeffs = coefficients_in(v);
  // Horner in v.
  Poly r(ctx_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a.ctx_, b.ctx_);
  Poly r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  Rat prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      prod = ca * cb;
      r.add_term(e, prod);
    }
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r(ctx_, 1), base(*this);
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  require_same(ctx_, o.ctx_);
  return terms_ == o.terms_;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  require_same(ctx_, o.ctx_);
  if (o.is_zero()) throw DomainError("division by zero polynomial");
  Poly q(ctx_), r(*this);
  const Exponents& le = o.leading_exponents();
  const Rat& lc = o.leading_coeff();
  while (!r.is_zero()) {
    const Exponents re = r.leading_exponents();
    Exponents e;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (re[i] < le[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(re[i] - le[i]);
    }
    Rat c = r.leading_coeff() / lc;
    q.add_term(e, c);
    for (const auto& [oe, oc] : o.terms_) {
      Exponents f;
      for (std::size_t i = 0; i < kMaxVars; ++i) f[i] = static_cast<std::uint16_t>(oe[i] + e[i]);
      r.add_term(f, -c * oc);
    }
  }
  return q;
}

Rat Poly::content() const {
  if (is_zero()) return 0;
  Int g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r(g, l);
  r.canonicalize();
  if (leading_coeff() < 0) r = -r;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rat c = content();
  Poly r(*this);
  r *= Rat(1) / c;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*this);
  r *= Rat(1) / leading_coeff();
  return r;
}

Poly Poly::remap(const Ctx& to, const std::vector<std::size_t>& var_map) const {
  Poly r(to);
  for (const auto& [e, c] : terms_) {
    Exponents f{};
    for (std::size_t i = 0; i < ctx_->total(); ++i) {
      if (!e[i]) continue;
      if (i >= var_map.size() || var_map[i] >= to->total()) throw ContextMismatch();
      f[var_map[i]] = static_cast<std::uint16_t>(f[var_map[i]] + e[i]);
    }
    r.add_term(f, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ctx_->total(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.get_str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace foliage
