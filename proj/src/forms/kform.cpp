#include <algorithm>
#include <bit>
#include <sstream>

#include "foliage/error.hpp"
#include "foliage/forms.hpp"

namespace foliage {

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 8; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

IndexMask mask_of(const std::vector<std::size_t>& idx) {
  IndexMask m = 0;
  for (auto i : idx) m = static_cast<IndexMask>(m | (1u << i));
  return m;
}

bool MaskOrder::operator()(IndexMask a, IndexMask b) const { return mask_indices(a) < mask_indices(b); }

KForm::KForm(Ctx ctx, unsigned degree) : ctx_(std::move(ctx)), degree_(degree) {
  if (degree_ > ctx_->arity()) throw DomainError("form degree exceeds the number of variables");
}

KForm KForm::scalar(const RatFn& f) {
  KForm w(f.ctx(), 0);
  w.set(0, f);
  return w;
}

KForm KForm::dx(const Ctx& ctx, std::size_t i) {
  if (i >= ctx->arity()) throw DomainError("dx index out of range");
  KForm w(ctx, 1);
  w.set(mask_of({i}), RatFn(ctx, 1));
  return w;
}

KForm KForm::one_form(const Ctx& ctx, const std::vector<RatFn>& coeffs) {
  if (coeffs.size() != ctx->arity()) throw DomainError("one_form: need one coefficient per variable");
  KForm w(ctx, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) w.set(mask_of({i}), coeffs[i]);
  return w;
}

RatFn KForm::coeff(IndexMask m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? RatFn(ctx_) : it->second;
}

std::vector<RatFn> KForm::components() const {
  if (degree_ != 1) throw DomainError("components: 1-form expected");
  std::vector<RatFn> out;
  for (std::size_t i = 0; i < ctx_->arity(); ++i) out.push_back(coeff(mask_of({i})));
  return out;
}

void KForm::set(IndexMask m, const RatFn& c) {
  require_same(c.ctx(), ctx_);
  if (static_cast<unsigned>(std::popcount(m)) != degree_ || (m >> ctx_->arity()) != 0)
    throw DomainError("index set does not match form degree");
  if (c.is_zero())
    coeffs_.erase(m);
  else
    coeffs_.insert_or_assign(m, c);
}

bool KForm::is_polynomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

bool KForm::has_params() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.num().has_params() || kv.second.den().has_params(); });
}

KForm KForm::operator-() const {
  KForm r(*this);
  for (auto& [m, c] : r.coeffs_) c = -c;
  return r;
}

KForm& KForm::operator+=(const KForm& o) {
  require_same(ctx_, o.ctx_);
  if (degree_ != o.degree_) throw DomainError("adding forms of different degrees");
  for (const auto& [m, c] : o.coeffs_) set(m, coeff(m) + c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm operator*(const RatFn& f, const KForm& w) {
  require_same(f.ctx(), w.ctx_);
  KForm r(w.ctx_, w.degree_);
  if (f.is_zero()) return r;
  for (const auto& [m, c] : w.coeffs_) r.set(m, f * c);
  return r;
}

bool KForm::operator==(const KForm& o) const {
  require_same(ctx_, o.ctx_);
  return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

unsigned KForm::order() const {
  if (!is_polynomial()) throw NotPolynomial();
  if (is_zero()) throw DomainError("zero form has no order");
  unsigned d = ~0u;
  for (const auto& [m, c] : coeffs_) d = std::min(d, c.num().geo_order());
  return d;
}

unsigned KForm::top_degree() const {
  if (!is_polynomial()) throw NotPolynomial();
  unsigned d = 0;
  for (const auto& [m, c] : coeffs_) d = std::max(d, c.num().geo_degree());
  return d;
}

bool KForm::is_homogeneous() const {
  if (!is_polynomial()) throw NotPolynomial();
  if (is_zero()) return true;
  return order() == top_degree();
}

KForm KForm::homogeneous_part(unsigned d) const {
  if (!is_polynomial()) throw NotPolynomial();
  KForm r(ctx_, degree_);
  for (const auto& [m, c] : coeffs_) r.set(m, RatFn(c.num().geo_homogeneous_part(d)));
  return r;
}

KForm KForm::truncate(unsigned max_degree) const {
  if (!is_polynomial()) throw NotPolynomial();
  KForm r(ctx_, degree_);
  for (const auto& [m, c] : coeffs_) r.set(m, RatFn(c.num().geo_truncate(max_degree)));
  return r;
}

std::string KForm::to_string() const {
  if (coeffs_.empty()) return "0";
  if (degree_ == 0) return coeffs_.begin()->second.to_string();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    std::string basis;
    for (auto i : mask_indices(m)) basis += (basis.empty() ? "d" : "∧d") + ctx_->name(i);
    if (c == RatFn(ctx_, 1))
      os << basis;
    else
      os << "(" << c.to_string() << ")*" << basis;
  }
  return os.str();
}

VecField radial_field(const Ctx& ctx) {
  VecField R{ctx, {}};
  for (std::size_t i = 0; i < ctx->arity(); ++i) R.components.emplace_back(Poly::var(ctx, i));
  return R;
}

namespace {
// dx_I ∧ dx_J = sign · dx_{I∪J}, or 0 when the sets meet.
int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (auto i : mask_indices(a))
    for (auto j : mask_indices(b))
      if (i > j) ++inversions;
  return inversions % 2 ? -1 : 1;
}
}  // namespace

KForm differential(const RatFn& f) {
  const Ctx& ctx = f.ctx();
  KForm w(ctx, 1);
  for (std::size_t i = 0; i < ctx->arity(); ++i) w.set(mask_of({i}), f.derivative(i));
  return w;
}

KForm exterior_derivative(const KForm& w) {
  const Ctx& ctx = w.ctx();
  if (w.degree() >= ctx->arity()) throw TopDegree();
  KForm r(ctx, w.degree() + 1);
  for (const auto& [m, c] : w.coeffs()) {
    for (std::size_t j = 0; j < ctx->arity(); ++j) {
      IndexMask dj = mask_of({j});
      int s = wedge_sign(dj, m);
      if (!s) continue;
      RatFn t = c.derivative(j);
      if (t.is_zero()) continue;
      IndexMask u = static_cast<IndexMask>(m | dj);
      r.set(u, r.coeff(u) + (s > 0 ? t : -t));
    }
  }
  return r;
}

bool is_closed(const KForm& w) {
  const Ctx& ctx = w.ctx();
  if (w.degree() >= ctx->arity()) return true;
  // Unreduced sums per output mask: reducing rational derivatives costs large gcds.
  std::map<IndexMask, std::pair<Poly, Poly>> acc;
  for (const auto& [m, c] : w.coeffs()) {
    for (std::size_t j = 0; j < ctx->arity(); ++j) {
      IndexMask dj = mask_of({j});
      int s = wedge_sign(dj, m);
      if (!s) continue;
      const Poly& n = c.num();
      const Poly& d = c.den();
      Poly tn = c.is_polynomial() ? n.derivative(j) : n.derivative(j) * d - n * d.derivative(j);
      if (tn.is_zero()) continue;
      if (s < 0) tn = -tn;
      Poly td = c.is_polynomial() ? d : d * d;
      IndexMask u = static_cast<IndexMask>(m | dj);
      auto it = acc.find(u);
      if (it == acc.end()) {
        acc.emplace(u, std::make_pair(std::move(tn), std::move(td)));
      } else if (it->second.second == td) {
        it->second.first += tn;
      } else {
        it->second.first = it->second.first * td + tn * it->second.second;
        it->second.second = it->second.second * td;
      }
    }
  }
  for (const auto& [u, f] : acc)
    if (!f.first.is_zero()) return false;
  return true;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_same(a.ctx(), b.ctx());
  const Ctx& ctx = a.ctx();
  if (a.degree() + b.degree() > ctx->arity()) throw DomainError("wedge: total degree exceeds the arity");
  KForm r(ctx, a.degree() + b.degree());
  for (const auto& [ma, ca] : a.coeffs())
    for (const auto& [mb, cb] : b.coeffs()) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      IndexMask u = static_cast<IndexMask>(ma | mb);
      RatFn t = ca * cb;
      r.set(u, r.coeff(u) + (s > 0 ? t : -t));
    }
  return r;
}

KForm interior_product(const VecField& X, const KForm& w) {
  require_same(X.ctx, w.ctx());
  if (w.degree() == 0) throw DomainError("interior product of a 0-form");
  if (X.components.size() != w.ctx()->arity()) throw DomainError("vector field length must equal arity");
  KForm r(w.ctx(), w.degree() - 1);
  for (const auto& [m, c] : w.coeffs()) {
    auto idx = mask_indices(m);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const RatFn& xi = X.components[idx[s]];
      if (xi.is_zero()) continue;
      IndexMask rest = static_cast<IndexMask>(m & ~(1u << idx[s]));
      RatFn t = xi * c;
      r.set(rest, r.coeff(rest) + (s % 2 ? -t : t));
    }
  }
  return r;
}

KForm lie_derivative(const VecField& X, const KForm& w) {
  require_same(X.ctx, w.ctx());
  KForm r(w.ctx(), w.degree());
  if (w.degree() < w.ctx()->arity()) r += interior_product(X, exterior_derivative(w));
  if (w.degree() > 0) r += exterior_derivative(interior_product(X, w));
  return r;
}

bool is_integrable(const KForm& w) {
  if (w.degree() != 1) throw DomainError("is_integrable: 1-form expected");
  if (w.ctx()->arity() <= 2) return true;
  return wedge(w, exterior_derivative(w)).is_zero();
}

std::pair<unsigned, KForm> initial_part(const KForm& w) {
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.is_zero()) throw DomainError("initial part of the zero form");
  unsigned nu = w.order();
  return {nu, w.homogeneous_part(nu)};
}

bool is_dicritical(const KForm& w) {
  if (w.degree() != 1) throw DomainError("is_dicritical: 1-form expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (!w.is_homogeneous()) throw DomainError("is_dicritical: homogeneous form expected");
  return interior_product(radial_field(w.ctx()), w).is_zero();
}

KForm pullback(const KForm& w, const PolyMap& phi) {
  require_same(w.ctx(), phi.target);
  const Ctx& src = phi.source;
  std::vector<KForm> dphi;
  for (const auto& im : phi.images) dphi.push_back(differential(im));
  KForm r(src, w.degree());
  for (const auto& [m, c] : w.coeffs()) {
    KForm term = KForm::scalar(substitute(c, phi));
    for (auto i : mask_indices(m)) term = wedge(term, dphi[i]);
    r += term;
  }
  return r;
}

KForm specialize(const KForm& w, const std::vector<std::pair<std::size_t, Rat>>& values) {
  KForm r(w.ctx(), w.degree());
  for (const auto& [m, c] : w.coeffs()) {
    Poly n = c.num(), d = c.den();
    for (const auto& [v, x] : values) {
      n = n.eval_var(v, x);
      d = d.eval_var(v, x);
    }
    if (d.is_zero()) throw DomainError("specialization hits a pole");
    r.set(m, RatFn(n, d));
  }
  return r;
}

}  // namespace foliage
