#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foliage/forms.hpp"
#include "foliage/germ.hpp"

namespace foliage {

// Homogeneous dicritical 1-form on three variables with coprime coefficients.
class HomogForm {
 public:
  // Throws DomainError naming the violated condition.
  static HomogForm make(const KForm& omega);
  const KForm& omega() const { return omega_; }
  unsigned nu() const { return nu_; }

 private:
  HomogForm(KForm omega, unsigned nu) : omega_(std::move(omega)), nu_(nu) {}
  KForm omega_;
  unsigned nu_;
};

// Sets x_chart = 1; the result lives on the two remaining variables.
KForm restrict_to_chart(const HomogForm& h, std::size_t chart);
// Inverse of restrict_to_chart. The new variable is inserted at position `chart` of
// `target` (default: x1, x2, x3 with the parameters of θ).
HomogForm homogenize_affine(const KForm& theta, unsigned nu, std::size_t chart = 2, Ctx target = nullptr);

enum class Family { Omega1, Omega2 };
std::string to_string(Family f);

// θ = x1[(1+αx1+βx2)dx1 + (ax1+bx2)dx2] + γx2²dx1 + (Px1²+Qx1x2+Rx2²)(x1dx2 − x2dx1),
// with (γ, R) = (0, 1) for Ω1 and (1, 0) for Ω2.
struct OmegaFamilyData {
  Family family;
  RatFn alpha, beta, a, b, P, Q;
  Rat gamma, R;
  // Diagonal scaling used: θ_normalized = k · φ*θ with φ(x1, x2) = (t·x1, x2).
  RatFn t, k;
};

struct FamilyResult {
  std::optional<OmegaFamilyData> data;
  std::string reason;  // set when data is empty
};

FamilyResult family_extract(const KForm& theta);
KForm family_reconstruct(const OmegaFamilyData& d, const Ctx& ctx);

// Names from {"a", "b", "P", "Q"} whose nonvanishing the caller asserts.
using Assumptions = std::set<std::string>;
Milnor mu_table(const OmegaFamilyData& d, const Assumptions& nonzero = {});

bool chi_contains(const Rat& r);

enum class DulacType { A, B, C, D, E, F, G, H, I, J };
std::string to_string(DulacType t);
DulacType parse_dulac_type(const std::string& s);

struct DulacComponents {
  std::vector<Poly> p;
  std::optional<Poly> q, f, g;
  std::vector<RatFn> lambda;
};

struct DulacForm {
  DulacType type;
  KForm eta;    // closed rational 1-form
  KForm omega;  // η with denominators cleared and the coefficient gcd removed
};

DulacForm dulac_build(DulacType type, const DulacComponents& c);
// A degree-1 factor of a polynomial in two variables, if one exists over Q.
std::optional<Poly> affine_factor(const Poly& h);

bool invariant_curve_check(const KForm& theta, const Poly& C);

struct BudgetPoint {
  std::size_t chart;
  std::vector<Rat> coords;  // the two affine coordinates of the chart
  unsigned mu = 0;
};

struct SingularBudget {
  std::vector<BudgetPoint> points;
  unsigned total = 0;
  unsigned expected = 0;  // ν² − ν + 1
  bool satisfied = false;
};

SingularBudget singular_budget_check(const HomogForm& h, std::vector<BudgetPoint> points);

bool transversely_affine_check(const KForm& w, const KForm& w1);
bool sl2_triplet_check(const KForm& w0, const KForm& w1, const KForm& w2);

// Σ λ_i df_i/f_i + d(H / Π f_i^{n_i})
KForm log_form_build(const std::vector<RatFn>& lambda, const std::vector<Poly>& f, const Poly& H,
                     const std::vector<unsigned>& n);

}  // namespace foliage
