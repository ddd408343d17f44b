#pragma once

#include <vector>

#include "foliage/forms.hpp"

namespace foliage {

struct BlowupChart {
  PolyMap map;
  std::size_t divisor_var;
};

// Standard monomial chart: x_index stays, every other x_j becomes x_index·x_j.
BlowupChart blowup_chart(const Ctx& ctx, std::size_t index);
BlowupChart blowup_chart(unsigned dim, std::size_t index);

struct StrictTransform {
  unsigned m;
  KForm form;
  bool divisor_invariant;
  std::size_t divisor_var;
  bool nonsingular_input;  // ω(0) ≠ 0: allowed, but nothing was blown up at a singularity
};

StrictTransform strict_transform(const KForm& w, const BlowupChart& chart);

struct WeightedResult {
  unsigned m;
  KForm form;  // in a context where x_var is renamed s
};

// Pulls back along x_var = s·x_other^weight and strips the largest power of x_other.
WeightedResult weighted_substitute(const KForm& w, std::size_t var, std::size_t other, unsigned weight);

struct DivisorPoints {
  // Coordinate of the non-divisor variable and the multiplicity of the root.
  std::vector<std::pair<Rat, unsigned>> points;
  bool complete;  // false when irrational roots may remain
};

DivisorPoints divisor_singular_points(const StrictTransform& st);

}  // namespace foliage
