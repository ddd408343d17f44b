#pragma once

#include <string>
#include <vector>

#include "foliage/poly.hpp"

namespace foliage {

// Reduced quotient num/den. The denominator is 1 when constant, monic otherwise.
class RatFn {
 public:
  explicit RatFn(Ctx ctx) : num_(ctx), den_(ctx, 1) {}
  RatFn(Ctx ctx, const Rat& c) : num_(ctx, c), den_(ctx, 1) {}
  RatFn(Poly p) : num_(std::move(p)), den_(num_.ctx(), 1) {}  // NOLINT implicit
  RatFn(Poly num, Poly den);

  const Ctx& ctx() const { return num_.ctx(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  bool has_geometric() const { return num_.has_geometric() || den_.has_geometric(); }
  // Throws NotPolynomial otherwise.
  const Poly& as_poly() const;

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn pow(int n) const;

  RatFn derivative(std::size_t v) const;

  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

// Images of the target's geometric variables, written in the source context.
// Parameters pass through by position; both contexts must list the same parameters.
struct PolyMap {
  Ctx source;
  Ctx target;
  std::vector<RatFn> images;

  PolyMap(Ctx source, Ctx target, std::vector<RatFn> images);
  static PolyMap identity(const Ctx& ctx);
  // (this ∘ inner): first apply inner, then this.
  PolyMap after(const PolyMap& inner) const;
};

RatFn substitute(const Poly& p, const PolyMap& map);
RatFn substitute(const RatFn& f, const PolyMap& map);

}  // namespace foliage
