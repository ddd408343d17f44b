#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliage/forms.hpp"
#include "foliage/linsolve.hpp"

namespace foliage {

enum class JetTag { Zero, Nilpotent, NonNilpotent };
std::string to_string(JetTag t);

struct JetClass {
  JetTag tag;
  bool kupka;
};

// Linear part of ω = Σ a_i dx_i as the matrix M with a_i ≈ Σ_j M[i][j] x_j.
std::vector<std::vector<Rat>> linear_part(const KForm& w);

// NILPOTENT iff the linear part is a nonzero symmetric rank-1 matrix, i.e. the 1-jet
// is conjugate to x1dx1; in two variables this is exactly a nonzero nilpotent dual field.
JetClass one_jet_class(const KForm& w);

enum class QuadTag { Kupka, Rank3, Rank2, Rank1 };
std::string to_string(QuadTag t);

struct QuadCase {
  QuadTag tag;
  std::optional<Poly> q;  // absent for Kupka
  Rat delta = 0;          // Rank1 only
};

QuadCase prop24_case(const KForm& w);

// std::nullopt stands for an infinite multiplicity.
using Milnor = std::optional<unsigned>;
std::string to_string(const Milnor& m);

// Local intersection multiplicity at the origin of two polynomials in two variables.
Milnor intersection_multiplicity(const Poly& f, const Poly& g);
Milnor milnor_number(const KForm& w);
// Milnor number at an affine point.
Milnor milnor_number_at(const KForm& w, const std::vector<Rat>& point);

// Truncated series l(u) = Σ coeffs[i] u^i, known modulo u^order.
struct Series {
  std::vector<Rat> coeffs;
  unsigned order;
};

struct LorayData {
  Poly f;  // in x2..xn of the target context
  Series l1, l2;
};

// x1dx1 + (l1(f) + x1 l2(f)) df. With max_degree set, the result is truncated there
// and the series must be known far enough to determine it.
KForm loray_form(const LorayData& data, std::optional<unsigned> max_degree = std::nullopt);

enum class Verdict { FirstIntegral, IntegratingFactor, Unresolved };
std::string to_string(Verdict v);

struct DeploymentCase {
  unsigned k, p;
  Verdict verdict;
};

struct DeploymentOutcome {
  unsigned mu;
  std::vector<DeploymentCase> cases;
};

// lambda_nonzero: the caller knows the coefficient λ of Remark 11 is nonzero, which
// settles the p ≥ 2 cases as integrating factors.
DeploymentOutcome deployment_outcomes(unsigned mu, bool lambda_nonzero = false);

struct SearchOptions {
  unsigned cap = 24;
  // Solve to order N + margin and keep only what survives projection to order N.
  // Unset: start at 2N and add N until the projected basis is stable (at most 4N).
  std::optional<unsigned> margin;
};

struct FactorShape {
  unsigned k;  // x1-adic valuation of f
  std::optional<unsigned> l;  // leading x2-exponent of g(0, x2); none if g(0, x2) = 0
  RatFn dg_dx1_at_0;
};

struct SeriesSearch {
  unsigned order;        // N
  unsigned solved_order;  // order of the last system solved
  std::vector<Poly> basis;  // N-jets, reduced echelon form
  // Only when the basis is empty: the least d ≤ N whose d-jet problem already has no solution.
  std::optional<unsigned> obstruction_degree;
  std::vector<Poly> exclusions;
  bool certifies_formal = false;  // never: truncated existence only
  std::vector<FactorShape> shapes;  // integrating-factor searches only
};

SeriesSearch first_integral_search(const KForm& w, unsigned N, const SearchOptions& opt = {});
SeriesSearch integrating_factor_search(const KForm& w, unsigned N, const SearchOptions& opt = {});

struct CenterResult {
  bool center;
  std::optional<Poly> witness;
};

CenterResult is_center_to_order(const KForm& w, unsigned N, const SearchOptions& opt = {});

}  // namespace foliage
