#include <random>
#include <set>

#include "helpers.hpp"

using namespace th;

namespace {

// ord_{x1} Res_{x2}(f, g) after a shear x1 -> x1 + c x2; minimum over a few shears.
Milnor resultant_oracle(const Poly& f, const Poly& g) {
  const Ctx& c = f.ctx();
  std::optional<unsigned> best;
  for (const Rat& s : {R(3, 7), R(-5, 11), R(2, 13)}) {
    PolyMap shear(c, c, {RatFn(Poly::var(c, 0) + Poly::var(c, 1) * s), RatFn(Poly::var(c, 1))});
    Poly r = resultant(substitute(f, shear).as_poly(), substitute(g, shear).as_poly(), 1);
    if (r.is_zero()) return std::nullopt;
    const unsigned order = r.valuation_in(0);
    best = best ? std::min(*best, order) : order;
  }
  return best;
}

}  // namespace

TEST_CASE("Milnor numbers match values from the sympy resultant oracle") {
  // tests/oracles/derive.py
  const std::vector<std::pair<std::string, unsigned>> frozen = {
      {"(x1 - x2^3)*dx1 + x1*x2^2*dx2", 5},
      {"(2*x1 + x2^2)*dx1 + 2*x1*x2*dx2", 3},
      {"(x1 + x2^2 - x1^2*x2)*dx1 + x1^3*dx2", 6},
      {"(x1^2 + x2^3)*dx1 + (x1*x2 + x2^4)*dx2", 5},
      {"(x2 + x1^2)*dx1 + (x1 - x2^2 + x1*x2)*dx2", 1},
      {"(x1^3 - x2^5)*dx1 + (x1*x2^2 + x2^7)*dx2", 11},
      {"x1*x2*dx1 + (x1^2 + x2^3)*dx2", 5},
      {"(x1 + x2^2 + 3*x1*x2)*dx1 + (x1^2*x2 - 2*x2^4)*dx2", 4},
  };
  for (const auto& [text, mu] : frozen) {
    INFO(text);
    CHECK(milnor_number(F(text)) == Milnor(mu));
  }
}

TEST_CASE("Fulton recursion agrees with the resultant oracle on random pairs") {
  Ctx c = standard_ctx(2);
  std::mt19937 rng(2024);
  int compared = 0;
  for (int i = 0; i < 30; ++i) {
    Poly f = catalogue::random_poly(c, 1 + i % 4, rng), g = catalogue::random_poly(c, 1 + (i / 4) % 4, rng);
    f = f - Poly(c, f.constant_term());
    g = g - Poly(c, g.constant_term());
    if (f.is_zero() || g.is_zero()) continue;
    if (!poly_gcd(f, g).is_constant()) continue;
    INFO(f.to_string() << " ; " << g.to_string());
    CHECK(intersection_multiplicity(f, g) == resultant_oracle(f, g));
    ++compared;
  }
  CHECK(compared >= 25);
}

TEST_CASE("exceptional numerator gcd by trial division") {
  auto e = catalogue::exceptional();
  const Ctx& c = e.F.ctx();
  Poly g(c);
  std::vector<Poly> coeffs;
  for (const auto& [m, v] : e.numerator.coeffs()) {
    coeffs.push_back(v.as_poly());
    g = poly_gcd(g, v.as_poly());
  }
  CHECK(g == Poly::var(c, 3));
  for (const auto& p : coeffs) {
    auto q = p.divide_exact(g);
    REQUIRE(q);
    CHECK(*q * g == p);
  }
  // sympy: (2G dF - 3F dG)_1 / x4 = 3 x1 x3 x4 - 2 x2^2 x4
  CHECK(*e.numerator.coeff(std::vector<std::size_t>{0}).as_poly().divide_exact(g) == P("3*x1*x3*x4 - 2*x2^2*x4", c));
}

TEST_CASE("generated part of chi lies inside the closed description") {
  std::set<Rat> generated;
  for (long k = 2; k < 40; ++k)
    for (long l = 0; l < 80; ++l) generated.insert(make_rat(l - 2, k - 1));
  for (const auto& r : generated) {
    INFO(to_string(r));
    CHECK(chi_contains(r));
  }
  // Negative integers below -2 are in the closed description only.
  CHECK_FALSE(generated.count(R(-5)));
  CHECK(chi_contains(R(-5)));
}
