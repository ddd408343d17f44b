#include "foliage/error.hpp"
#include "foliage/germ.hpp"

namespace foliage {

std::string to_string(JetTag t) {
  switch (t) {
    case JetTag::Zero: return "ZERO";
    case JetTag::Nilpotent: return "NILPOTENT";
    case JetTag::NonNilpotent: return "NON_NILPOTENT";
  }
  return "?";
}

std::string to_string(QuadTag t) {
  switch (t) {
    case QuadTag::Kupka: return "KUPKA";
    case QuadTag::Rank3: return "RANK3";
    case QuadTag::Rank2: return "RANK2";
    case QuadTag::Rank1: return "RANK1";
  }
  return "?";
}

namespace {

void require_numeric_polynomial(const KForm& w) {
  if (w.degree() != 1) throw DomainError("1-form expected");
  if (!w.is_polynomial()) throw NotPolynomial();
  if (w.has_params()) throw ParametersPresent();
}

std::size_t rank(std::vector<std::vector<Rat>> m) {
  return span_basis(std::move(m)).size();
}

bool nonzero(const std::vector<std::vector<Rat>>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return true;
  return false;
}

}  // namespace

std::vector<std::vector<Rat>> linear_part(const KForm& w) {
  require_numeric_polynomial(w);
  const std::size_t n = w.ctx()->arity();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  auto comps = w.components();
  for (std::size_t i = 0; i < n; ++i) {
    Poly lin = comps[i].num().geo_homogeneous_part(1);
    for (std::size_t j = 0; j < n; ++j) M[i][j] = lin.derivative(j).constant_term();
  }
  return M;
}

JetClass one_jet_class(const KForm& w) {
  const std::size_t n = w.ctx()->arity();
  if (n < 2 || n > 3) throw DomainError("one_jet_class: 2 or 3 variables expected");
  auto M = linear_part(w);
  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (M[i][j] != M[j][i]) symmetric = false;
  JetClass jc{JetTag::NonNilpotent, !symmetric};  // dω(0) is the antisymmetric part
  if (!nonzero(M))
    jc.tag = JetTag::Zero;
  else if (symmetric && rank(M) == 1)
    jc.tag = JetTag::Nilpotent;
  return jc;
}

QuadCase prop24_case(const KForm& w) {
  if (w.ctx()->arity() != 3) throw DomainError("prop24_case: 3 variables expected");
  auto M = linear_part(w);
  // Restriction to x3 = 0 must have 1-jet c·x1dx1.
  if (M[0][0] == 0 || M[0][1] != 0 || M[1][0] != 0 || M[1][1] != 0)
    throw DomainError("prop24_case: restriction to x3=0 must have 1-jet of type x1dx1");
  bool closed = M[0][1] == M[1][0] && M[0][2] == M[2][0] && M[1][2] == M[2][1];
  if (!closed) {
    if (M[0][1] != M[1][0] || M[1][2] != M[2][1])
      throw DomainError("prop24_case: dω(0) must be a multiple of dx1∧dx3 (integrability)");
    return {QuadTag::Kupka, std::nullopt, 0};
  }
  const Ctx& ctx = w.ctx();
  Poly q(ctx);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q += Poly::var(ctx, i) * Poly::var(ctx, j) * (M[i][j] / 2);
  switch (rank(M)) {
    case 3: return {QuadTag::Rank3, q, 0};
    case 2: return {QuadTag::Rank2, q, 0};
    default: return {QuadTag::Rank1, q, M[0][2] / M[0][0]};
  }
}

}  // namespace foliage
