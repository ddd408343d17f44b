#include <random>

#include "helpers.hpp"
#include "foliage/blowup.hpp"

using namespace th;

TEST_CASE("chart maps") {
  Ctx c2 = standard_ctx(2), c3 = standard_ctx(3);
  auto a = blowup_chart(2, 0);
  CHECK(a.divisor_var == 0);
  CHECK(a.map.images[1] == S("x1*x2", c2));
  auto b = blowup_chart(3, 0);
  CHECK(b.map.images == std::vector<RatFn>{S("x1", c3), S("x1*x2", c3), S("x1*x3", c3)});
  auto d = blowup_chart(3, 2);
  CHECK(d.map.images == std::vector<RatFn>{S("x3*x1", c3), S("x3*x2", c3), S("x3", c3)});
  CHECK_THROWS_AS(blowup_chart(3, 3), DomainError);
  CHECK_THROWS_AS(blowup_chart(4, 0), DomainError);
}

TEST_CASE("strict transforms") {
  Ctx c3 = standard_ctx(3);
  auto st = strict_transform(F("x3*(x1*dx2 - x2*dx1)"), blowup_chart(3, 0));
  CHECK(st.m == 3);
  CHECK(st.form == F("x3*dx2"));
  CHECK_FALSE(st.divisor_invariant);
  auto pencil = catalogue::conic_pencil();
  CHECK(strict_transform(pencil.omega3, blowup_chart(pencil.Q1.ctx(), 2)).m == 4);
  // E*(x1 dx1) = x1 dx1 in chart (2,0): ν = 1, not dicritical.
  auto lin = strict_transform(F("x1*dx1"), blowup_chart(2, 0));
  CHECK(lin.m == 1);
  CHECK(lin.divisor_invariant);
  auto flat = strict_transform(F("dx1 + x2*dx2"), blowup_chart(2, 1));
  CHECK(flat.nonsingular_input);
  CHECK_THROWS_AS(strict_transform(F("x1*dx1/x2"), blowup_chart(2, 0)), NotPolynomial);
}

TEST_CASE("charts agree on the overlap") {
  std::mt19937 rng(41);
  Ctx c = standard_ctx(2);
  // (s, y) in chart 2 is (x, t) = (s y, 1/s) in chart 1.
  PolyMap tr(c, c, {S("x1*x2", c), S("1/x1", c)});
  for (int i = 0; i < 10; ++i) {
    Poly a = catalogue::random_poly(c, 2, rng), b = catalogue::random_poly(c, 3, rng);
    KForm w = KForm::one_form(c, {RatFn(a - Poly(c, a.constant_term())), RatFn(b - Poly(c, b.constant_term()))});
    if (w.is_zero()) continue;
    auto s0 = strict_transform(w, blowup_chart(c, 0));
    auto s1 = strict_transform(w, blowup_chart(c, 1));
    CHECK(s0.m == s1.m);
    CHECK(pullback(s0.form, tr) == S("1/x1", c).pow(static_cast<int>(s0.m)) * s1.form);
  }
}

TEST_CASE("multiplicity detects dicritical homogeneous forms") {
  Ctx c = standard_ctx(3);
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    Poly f1 = catalogue::random_poly(c, 1 + i % 2, rng).geo_homogeneous_part(1 + i % 2);
    Poly f2 = catalogue::random_poly(c, 2, rng).geo_homogeneous_part(2);
    if (f1.is_zero() || f2.is_zero()) continue;
    const unsigned d1 = 1 + i % 2;
    KForm w = i % 3 == 0 ? RatFn(f2) * differential(RatFn(f1))
                         : RatFn(f1 * Rat(d1)) * differential(RatFn(f2)) - RatFn(f2 * Rat(2)) * differential(RatFn(f1));
    if (w.is_zero()) continue;
    auto st = strict_transform(w, blowup_chart(c, i % 3));
    CHECK((st.m == w.order() + 1) == is_dicritical(w));
    if (is_dicritical(w)) CHECK_FALSE(st.divisor_invariant);
    CHECK(is_integrable(st.form));
  }
}

TEST_CASE("weighted substitution") {
  auto a = weighted_substitute(F("dx1"), 0, 1, 2);
  CHECK(a.m == 1);
  const Ctx& c = a.form.ctx();
  CHECK(a.form.components()[0] == RatFn(Poly::var(c, 1)));
  CHECK(a.form.components()[1] == RatFn(Poly::var(c, 0) * R(2)));
  auto b = weighted_substitute(F("x1*dx1"), 0, 1, 1);
  CHECK(b.m == 1);
  CHECK_THROWS_AS(weighted_substitute(F("dx1"), 0, 0, 1), DomainError);
  CHECK_THROWS_AS(weighted_substitute(F("dx1"), 0, 1, 0), DomainError);
}

TEST_CASE("rational points on the divisor") {
  // Strict transform of x2dx1 + x1dx2 in chart (2,0) is 2x2 dx1 + x1 dx2: one point t = 0.
  auto a = divisor_singular_points(strict_transform(F("x2*dx1 + x1*dx2"), blowup_chart(2, 0)));
  REQUIRE(a.points.size() == 1);
  CHECK(a.points[0].first == 0);
  CHECK(a.complete);
  // x1dx1 + x2dx2: the divisor meets the foliation at t = ±i only.
  auto b = divisor_singular_points(strict_transform(F("x1*dx1 + x2*dx2"), blowup_chart(2, 0)));
  CHECK(b.points.empty());
  CHECK_FALSE(b.complete);
  auto c = divisor_singular_points(strict_transform(F("x1*dx1"), blowup_chart(2, 1)));
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0].first == 0);
}
