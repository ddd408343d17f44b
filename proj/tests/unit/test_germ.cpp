#include <random>

#include "helpers.hpp"

using namespace th;

namespace {

bool contains(const std::vector<Poly>& basis, const Poly& p) {
  for (const auto& b : basis)
    if (b == p) return true;
  return false;
}

LorayData loray(unsigned k, unsigned p) {
  Ctx c = standard_ctx(2);
  Series l1{std::vector<Rat>(p + 1, Rat(0)), p + 1};
  l1.coeffs[p] = R(3, 2);
  return {Poly::var(c, 1).pow(k), l1, Series{{}, 1}};
}

}  // namespace

TEST_CASE("one-jet classes") {
  auto a = one_jet_class(F("x1*dx1"));
  CHECK(a.tag == JetTag::Nilpotent);
  CHECK_FALSE(a.kupka);
  auto b = one_jet_class(F("x2*dx1 + x1*dx2"));
  CHECK(b.tag == JetTag::NonNilpotent);
  CHECK_FALSE(b.kupka);
  // The dual field of x1 dx2 is -x1 d/dx1, not nilpotent; dω(0) = dx1^dx2 makes it Kupka.
  auto c = one_jet_class(F("x1*dx2"));
  CHECK(c.tag == JetTag::NonNilpotent);
  CHECK(c.kupka);
  CHECK(one_jet_class(F("x1^2*dx2")).tag == JetTag::Zero);
  CHECK(to_string(JetTag::Nilpotent) == "NILPOTENT");
  CHECK_THROWS_AS(one_jet_class(F("x4*dx1")), DomainError);
}

TEST_CASE("quadratic cases in three variables") {
  CHECK(prop24_case(F("x1*dx1 + x3*dx1 + x1*dx3", {}, 3)).tag == QuadTag::Rank2);
  CHECK(prop24_case(differential(S("x1^2/2 + x3*x2 + x3^2", standard_ctx(3)))).tag == QuadTag::Rank3);
  auto r1 = prop24_case(F("(x1 + 2*x3)*(dx1 + 2*dx3)", {}, 3));
  CHECK(r1.tag == QuadTag::Rank1);
  CHECK(r1.delta == R(2));
  CHECK(prop24_case(F("x1*dx1 + x1*dx3", {}, 3)).tag == QuadTag::Kupka);
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(catalogue::cusp_form()) == Milnor(5u));
  CHECK(milnor_number(catalogue::closed_omega2()) == Milnor(3u));
  CHECK(milnor_number(catalogue::airy_affine()) == Milnor(6u));
  CHECK_FALSE(milnor_number(F("x1*dx1")).has_value());
  CHECK(milnor_number(F("dx1 + x2*dx2")) == Milnor(0u));
  CHECK(milnor_number_at(F("(x1 - 1)*dx1 + (x2 + 2)*dx2"), {R(1), R(-2)}) == Milnor(1u));
  CHECK_THROWS_AS(milnor_number(F("b*x1*dx1 + x2*dx2", {"b"})), ParametersPresent);
  CHECK(to_string(Milnor()) == "INFINITE");
}

TEST_CASE("Fulton axioms as metamorphic relations") {
  Ctx c = standard_ctx(2);
  std::mt19937 rng(23);
  auto vanishing = [&](unsigned d) {
    Poly p = catalogue::random_poly(c, d, rng);
    return p - Poly(c, p.constant_term());
  };
  for (int i = 0; i < 15; ++i) {
    Poly a = vanishing(2), b = vanishing(3), h = catalogue::random_poly(c, 1, rng), d = vanishing(2);
    if (a.is_zero() || b.is_zero() || d.is_zero()) continue;
    Milnor ab = intersection_multiplicity(a, b);
    CHECK(ab == intersection_multiplicity(b, a));
    CHECK(ab == intersection_multiplicity(a, b + h * a));
    Milnor ad = intersection_multiplicity(a, d), abd = intersection_multiplicity(a, b * d);
    if (ab && ad) CHECK(abd == Milnor(*ab + *ad));
  }
}

TEST_CASE("Loray normal form") {
  for (unsigned k : {2u, 3u, 4u})
    for (unsigned p : {0u, 1u, 2u}) {
      KForm w = loray_form(loray(k, p));
      CHECK(milnor_number(w) == Milnor(k * (p + 1) - 1));
    }
  Ctx c = standard_ctx(2);
  // f = x2^3, l1 = u: x1dx1 + 3x2^5 dx2.
  LorayData cusp{Poly::var(c, 1).pow(3), Series{{R(0), R(1)}, 2}, Series{{}, 1}};
  CHECK(loray_form(cusp) == F("x1*dx1 + 3*x2^5*dx2"));
  LorayData unit{Poly::var(c, 1), Series{{R(1)}, 1}, Series{{}, 1}};
  CHECK(loray_form(unit) == F("x1*dx1 + dx2"));
  LorayData bad{Poly::var(c, 0), Series{{R(1)}, 1}, Series{{}, 1}};
  CHECK_THROWS_AS(loray_form(bad), DomainError);
  CHECK_THROWS_AS(loray_form(loray(2, 1), 10), DomainError);
}

TEST_CASE("deployment outcomes") {
  auto three = deployment_outcomes(3);
  REQUIRE(three.cases.size() == 2);
  CHECK(three.cases[0].k == 4);
  CHECK(three.cases[0].verdict == Verdict::FirstIntegral);
  CHECK(three.cases[1].k == 2);
  CHECK(three.cases[1].p == 1);
  CHECK(three.cases[1].verdict == Verdict::IntegratingFactor);
  auto two = deployment_outcomes(2);
  REQUIRE(two.cases.size() == 1);
  CHECK(two.cases[0].verdict == Verdict::FirstIntegral);
  auto five = deployment_outcomes(5);
  REQUIRE(five.cases.size() == 3);
  CHECK(five.cases[2].k == 2);
  CHECK(five.cases[2].p == 2);
  CHECK(five.cases[2].verdict == Verdict::Unresolved);
  CHECK(deployment_outcomes(5, true).cases[2].verdict == Verdict::IntegratingFactor);
  CHECK_THROWS_AS(deployment_outcomes(1), DomainError);
  for (unsigned mu = 2; mu < 40; ++mu)
    for (const auto& x : deployment_outcomes(mu).cases) {
      CHECK(x.k * (x.p + 1) == mu + 1);
      if (x.p == 0) CHECK(x.verdict == Verdict::FirstIntegral);
    }
}

TEST_CASE("first integral search") {
  auto s = first_integral_search(F("x2*dx1 + x1*dx2"), 4);
  Ctx c = standard_ctx(2);
  CHECK(contains(s.basis, P("x1*x2", c)));
  CHECK(contains(s.basis, P("x1^2*x2^2", c)));
  CHECK_FALSE(s.certifies_formal);
  auto t = first_integral_search(catalogue::closed_omega2(), 3);
  CHECK(contains(t.basis, P("x1^2 + x1*x2^2", c)));
  auto none = first_integral_search(F("x1*dx2 - 5*x2*dx1"), 2);
  CHECK(none.basis.empty());
  CHECK(none.obstruction_degree.has_value());
  CHECK_THROWS_AS(first_integral_search(F("x1*dx1"), 25), DomainError);
  // p = 0 germs have the first integral x1^2/2 + x2^k.
  for (unsigned k : {2u, 3u}) {
    auto w = loray_form(loray(k, 0));
    CHECK_FALSE(first_integral_search(w, k + 1).basis.empty());
  }
}

TEST_CASE("search results satisfy their congruence") {
  auto check_integrals = [](const KForm& w, unsigned N) {
    auto s = first_integral_search(w, N);
    for (const auto& f : s.basis) {
      KForm r = wedge(w, differential(RatFn(f)));
      CHECK(r.truncate(N).is_zero());
    }
  };
  check_integrals(catalogue::closed_omega2(), 6);
  check_integrals(F("x2*dx1 + x1*dx2 + x1^2*dx1"), 5);
  auto check_factors = [](const KForm& w, unsigned N) {
    auto s = integrating_factor_search(w, N);
    for (const auto& f : s.basis) {
      KForm r = RatFn(f) * exterior_derivative(w) + wedge(w, differential(RatFn(f)));
      CHECK(r.truncate(N).is_zero());
    }
  };
  check_factors(catalogue::omega2_b(R(-3, 5)), 6);
  check_factors(catalogue::ramified_omega2(), 5);
}

TEST_CASE("integrating factor search") {
  Ctx c = standard_ctx(2);
  auto t3 = integrating_factor_search(catalogue::ramified_omega2(), 5);
  REQUIRE(t3.basis.size() == 1);
  CHECK(t3.basis[0] == P("x1^2", c));
  auto closed = integrating_factor_search(catalogue::closed_omega2(), 3);
  CHECK(contains(closed.basis, Poly(c, 1)));
  const Rat b = R(-3, 5);
  auto l37 = integrating_factor_search(catalogue::omega2_b(b), 6);
  REQUIRE_FALSE(l37.basis.empty());
  for (const auto& sh : l37.shapes) {
    CHECK(sh.k == 1);
    CHECK(sh.l == 2u);
    CHECK(sh.dg_dx1_at_0 == RatFn(c, Rat(2) / (b + 2)));
  }
}

TEST_CASE("centers") {
  auto a = is_center_to_order(F("x1*dx1 + x2*dx2"), 4);
  CHECK(a.center);
  REQUIRE(a.witness);
  CHECK(*a.witness == P("x1^2 + x2^2", standard_ctx(2)));  // basis elements are primitive
  CHECK_FALSE(is_center_to_order(F("x1*dx2 - 5*x2*dx1"), 2).center);
  Ctx c = standard_ctx(2);
  PolyMap sigma(c, c, {S("x2", c), S("x1*x2", c)});
  CHECK(is_center_to_order(pullback(F("(x1 + x2^2)*dx1 + (1 + x1)*dx2"), sigma), 4).center);
  CHECK_THROWS_AS(is_center_to_order(F("dx1"), 3), DomainError);
}
