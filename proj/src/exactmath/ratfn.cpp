#include "foliage/ratfn.hpp"

#include "foliage/error.hpp"

namespace foliage {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same(num_.ctx(), den_.ctx());
  if (den_.is_zero()) throw DomainError("zero denominator");
  reduce();
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(num_.ctx(), 1);
    return;
  }
  if (den_.is_constant()) {
    Rat c = den_.to_rat();
    if (c != 1) {
      num_ *= Rat(1) / c;
      den_ = Poly(num_.ctx(), 1);
    }
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Rat lc = den_.leading_coeff();
  if (den_.is_constant()) {
    num_ *= Rat(1) / lc;
    den_ = Poly(num_.ctx(), 1);
  } else if (lc != 1) {
    num_ *= Rat(1) / lc;
    den_ *= Rat(1) / lc;
  }
}

const Poly& RatFn::as_poly() const {
  if (!is_polynomial()) throw NotPolynomial();
  return num_;
}

RatFn RatFn::operator-() const {
  RatFn r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::pow(int n) const {
  if (n >= 0) {
    RatFn r(num_.pow(static_cast<unsigned>(n)));
    r.den_ = den_.pow(static_cast<unsigned>(n));
    return r;  // already reduced: powers of coprime polys stay coprime
  }
  if (is_zero()) throw DomainError("negative power of zero");
  return RatFn(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
}

RatFn RatFn::derivative(std::size_t v) const {
  if (is_polynomial()) return RatFn(num_.derivative(v));
  return RatFn(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::string RatFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

PolyMap::PolyMap(Ctx source_, Ctx target_, std::vector<RatFn> images_)
    : source(std::move(source_)), target(std::move(target_)), images(std::move(images_)) {
  if (images.size() != target->arity()) throw DomainError("PolyMap: image count must equal target arity");
  if (source->params() != target->params()) throw ContextMismatch();
  for (const auto& im : images) require_same(im.ctx(), source);
}

PolyMap PolyMap::identity(const Ctx& ctx) {
  std::vector<RatFn> im;
  for (std::size_t i = 0; i < ctx->arity(); ++i) im.emplace_back(Poly::var(ctx, i));
  return PolyMap(ctx, ctx, std::move(im));
}

PolyMap PolyMap::after(const PolyMap& inner) const {
  require_same(inner.target, source);
  std::vector<RatFn> im;
  for (const auto& f : images) im.push_back(substitute(f, inner));
  return PolyMap(inner.source, target, std::move(im));
}

RatFn substitute(const Poly& p, const PolyMap& map) {
  require_same(p.ctx(), map.target);
  const Ctx& src = map.source;
  const std::size_t ta = map.target->arity(), sa = src->arity();
  // Common denominator: each image i enters with den_i^deg_i(p).
  std::vector<unsigned> deg(ta);
  for (std::size_t i = 0; i < ta; ++i) deg[i] = p.degree_in(i);
  std::vector<std::vector<Poly>> num_pow(ta), den_pow(ta);
  for (std::size_t i = 0; i < ta; ++i) {
    num_pow[i].push_back(Poly(src, 1));
    den_pow[i].push_back(Poly(src, 1));
    for (unsigned k = 1; k <= deg[i]; ++k) {
      num_pow[i].push_back(num_pow[i].back() * map.images[i].num());
      den_pow[i].push_back(den_pow[i].back() * map.images[i].den());
    }
  }
  Poly total(src);
  for (const auto& [e, c] : p.terms()) {
    Exponents pe{};
    for (std::size_t j = 0; j < map.target->nparams(); ++j) pe[sa + j] = e[ta + j];
    Poly term = Poly::monomial(src, pe, c);
    for (std::size_t i = 0; i < ta; ++i) {
      if (e[i]) term = term * num_pow[i][e[i]];
      if (deg[i] > e[i]) term = term * den_pow[i][deg[i] - e[i]];
    }
    total += term;
  }
  Poly den(src, 1);
  for (std::size_t i = 0; i < ta; ++i) den = den * den_pow[i][deg[i]];
  return RatFn(std::move(total), std::move(den));
}

RatFn substitute(const RatFn& f, const PolyMap& map) {
  if (f.is_polynomial()) return substitute(f.num(), map);
  return substitute(f.num(), map) / substitute(f.den(), map);
}

}  // namespace foliage
