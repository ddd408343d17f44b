#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliage/rational.hpp"
#include "foliage/varctx.hpp"

namespace foliage {

using Exponents = std::array<std::uint16_t, kMaxVars>;

unsigned total_degree(const Exponents& e);

// Graded lex, descending: the leading term sorts first.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
 public:
  using Terms = std::map<Exponents, Rat, TermOrder>;

  explicit Poly(Ctx ctx) : ctx_(std::move(ctx)) {}
  Poly(Ctx ctx, const Rat& c);

  static Poly var(const Ctx& ctx, std::size_t v);
  static Poly monomial(const Ctx& ctx, const Exponents& e, const Rat& c = 1);

  const Ctx& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  // Only valid for constants.
  Rat to_rat() const;

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t v) const;
  // Degrees counting only geometric variables.
  unsigned geo_degree() const;
  unsigned geo_order() const;
  bool geo_homogeneous() const;
  Poly geo_homogeneous_part(unsigned d) const;
  Poly geo_truncate(unsigned max_degree) const;
  bool has_geometric() const;
  bool has_params() const;
  bool involves(std::size_t v) const;

  // Coefficients of v^0, v^1, ... as polynomials free of v.
  std::vector<Poly> coefficients_in(std::size_t v) const;
  // x_v-adic valuation (largest k with x_v^k | p); 0 for the zero polynomial.
  unsigned valuation_in(std::size_t v) const;
  Poly shift_down(std::size_t v, unsigned k) const;

  Poly derivative(std::size_t v) const;
  Poly eval_var(std::size_t v, const Rat& value) const;
  Poly substitute_var(std::size_t v, const Poly& value) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly pow(unsigned n) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact quotient, or nullopt if o does not divide *this.
  std::optional<Poly> divide_exact(const Poly& o) const;
  // Multiply by a constant so coefficients are coprime integers with positive lead.
  Poly primitive() const;
  Rat content() const;
  Poly monic() const;

  // Same terms viewed in another context; var_map[i] is the new index of variable i.
  Poly remap(const Ctx& to, const std::vector<std::size_t>& var_map) const;

  std::string to_string() const;

  void add_term(const Exponents& e, const Rat& c);

 private:
  Ctx ctx_;
  Terms terms_;
};

inline Poly operator+(Poly a, const Rat& c) { return a += Poly(a.ctx(), c); }
inline Poly operator-(Poly a, const Rat& c) { return a -= Poly(a.ctx(), c); }

// gcd over Q, normalized by Poly::primitive.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly poly_lcm(const Poly& p, const Poly& q);

// Univariate resultant helper: Res_v(p, q) as a polynomial free of v.
Poly resultant(const Poly& p, const Poly& q, std::size_t v);

// Rational roots (with multiplicity) of a polynomial in one variable v.
struct RationalRoots {
  std::vector<std::pair<Rat, unsigned>> roots;
  // Degree left after removing all rational linear factors.
  unsigned remaining_degree = 0;
};
RationalRoots rational_roots(const Poly& p, std::size_t v);

}  // namespace foliage
