#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foliage/ratfn.hpp"

namespace foliage {

// Subsets of geometric indices as bit masks; ordered lexicographically by index tuple.
using IndexMask = std::uint8_t;
struct MaskOrder {
  bool operator()(IndexMask a, IndexMask b) const;
};
std::vector<std::size_t> mask_indices(IndexMask m);
IndexMask mask_of(const std::vector<std::size_t>& idx);

class KForm {
 public:
  using Coeffs = std::map<IndexMask, RatFn, MaskOrder>;

  KForm(Ctx ctx, unsigned degree);
  static KForm scalar(const RatFn& f);
  static KForm dx(const Ctx& ctx, std::size_t i);
  static KForm one_form(const Ctx& ctx, const std::vector<RatFn>& coeffs);

  const Ctx& ctx() const { return ctx_; }
  unsigned degree() const { return degree_; }
  const Coeffs& coeffs() const { return coeffs_; }

  RatFn coeff(IndexMask m) const;
  RatFn coeff(const std::vector<std::size_t>& idx) const { return coeff(mask_of(idx)); }
  // One entry per geometric variable; 1-forms only.
  std::vector<RatFn> components() const;
  void set(IndexMask m, const RatFn& c);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_polynomial() const;
  bool has_params() const;

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const RatFn& f, const KForm& w);
  friend KForm operator*(const KForm& w, const RatFn& f) { return f * w; }

  bool operator==(const KForm& o) const;
  bool operator!=(const KForm& o) const { return !(*this == o); }

  // Polynomial-coefficient grading (geometric degree of the coefficients).
  unsigned order() const;
  unsigned top_degree() const;
  bool is_homogeneous() const;
  KForm homogeneous_part(unsigned d) const;
  KForm truncate(unsigned max_degree) const;

  std::string to_string() const;

 private:
  Ctx ctx_;
  unsigned degree_;
  Coeffs coeffs_;
};

struct VecField {
  Ctx ctx;
  std::vector<RatFn> components;
};

VecField radial_field(const Ctx& ctx);

KForm differential(const RatFn& f);
KForm exterior_derivative(const KForm& w);
// dω = 0, decided without reducing rational coefficients.
bool is_closed(const KForm& w);
KForm wedge(const KForm& a, const KForm& b);
KForm interior_product(const VecField& X, const KForm& w);
KForm lie_derivative(const VecField& X, const KForm& w);
bool is_integrable(const KForm& w);
// (ν, ω_ν)
std::pair<unsigned, KForm> initial_part(const KForm& w);
bool is_dicritical(const KForm& w);
KForm pullback(const KForm& w, const PolyMap& phi);

// Coefficientwise substitution of parameters by rationals (context keeps the parameter list).
KForm specialize(const KForm& w, const std::vector<std::pair<std::size_t, Rat>>& values);

}  // namespace foliage
