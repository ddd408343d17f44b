#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "foliage/degree2.hpp"

// Named forms used by verify-suite, the acceptance driver and the tests.
namespace foliage::catalogue {

// (x1 - x2³)dx1 + x1x2²dx2 with first integral (3x1 - 2x2³)/x1³.
KForm cusp_form();
RatFn cusp_first_integral();
// (2x1 + x2²)dx1 + 2x1x2dx2, closed, first integral x1² + x1x2².
KForm closed_omega2();
// (x1 + x2²)dx1 - 2x1x2dx2, integrating factor x1².
KForm ramified_omega2();
// (x1 + x2²)dx1 + b x1x2 dx2.
KForm omega2_b(const Rat& b);
// (x1 + x2² - x1²x2)dx1 + x1³dx2.
KForm airy_affine();

// Nilpotent cusp with a = 1, symbolic in b. Q is the coefficient of x1x2 in q.
struct CuspA1 {
  KForm omega;
  Poly l, G;
};
CuspA1 cusp_a1(bool q_positive);

// Affine form (1 + by/2 - Qy²/2)dx + (Qxy - 3y²)dy, symbolic in b and Q.
struct CuspA0 {
  KForm omega;
  Poly conic, unit;
};
CuspA0 cusp_a0();

// θ0 = x1x2(x1 - x2)(λ1 dx1/x1 + λ2 dx2/x2 + λ3 d(x2-x1)/(x2-x1)) + q(x1dx2 - x2dx1)
// with λ3 = 1 - λ1 - λ2 symbolic (parameters l1, l2). q must live in tag_ctx().
Ctx tag_ctx();
KForm tag_theta0(const Poly& q);
KForm tag_omega1();

// Conic pencil on x0, x1, x2.
struct Pencil {
  Poly Q1, Q2;
  KForm omega3;
  std::vector<BudgetPoint> radial, centers;
};
Pencil conic_pencil();
KForm pencil_omega_L(const Pencil& p, const Rat& a0, const Rat& a1, const Rat& a2);

// x0x1x2 s (λ0 dx0/x0 + λ1 dx1/x1 + λ2 dx2/x2 - ds/s), s = x0+x1+x2, λ2 = 1 - λ0 - λ1.
KForm log_1111();
KForm log_1111(const Rat& l0, const Rat& l1);

// F = x3x4² - x1x2x4 + x1³/3, G = x2x4 - x1²/2 on x1..x4.
struct Exceptional {
  Poly F, G;
  KForm numerator;  // 2G dF - 3F dG
};
Exceptional exceptional();
// (2g df - 3f dg + fg d(L²))/L on the hyperplane x4 = L = a x1 + b x2 + c x3.
KForm exceptional_section(const Rat& a, const Rat& b, const Rat& c);

// Homogeneous forms for the Euler identities; the flag marks dicritical ones.
struct NamedForm {
  std::string name;
  KForm omega;
  bool dicritical;
};
std::vector<NamedForm> homogeneous_corpus();

// Seeded random instances.
Rat random_rat(std::mt19937& rng, int range = 9, bool nonzero = false);
Poly random_poly(const Ctx& ctx, unsigned degree, std::mt19937& rng);
DulacComponents random_dulac(DulacType t, std::mt19937& rng);
// Row r of the μ-table: 0..3 are the Ω2 rows μ = 3..6, 4 and 5 are the Ω1 rows μ = 4, 5.
OmegaFamilyData random_family(int row, const Ctx& ctx, std::mt19937& rng);
unsigned family_row_mu(int row);

}  // namespace foliage::catalogue
