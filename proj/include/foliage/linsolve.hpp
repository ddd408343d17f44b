#pragma once

#include <vector>

#include "foliage/ratfn.hpp"

namespace foliage {

using Vec = std::vector<RatFn>;
using Matrix = std::vector<Vec>;

struct LinSolution {
  bool consistent = true;
  Vec particular;
  std::vector<Vec> basis;  // kernel
  // Nonconstant pivots; the generic solution may fail where one vanishes.
  std::vector<Poly> exclusions;
};

// Solves A x = rhs over the fraction field of Q[variables appearing in A].
// Constant systems use rational Gauss-Jordan; others fraction-free elimination.
LinSolution linear_solve(const Matrix& A, const Vec& rhs);

// Sparse rational kernel for the large constant systems of the series searches.
// Rows are (column, value) lists.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;
std::vector<std::vector<Rat>> rational_kernel(std::vector<SparseRow> rows, std::size_t ncols);

// Reduced row-echelon basis of the span of the given vectors.
std::vector<Vec> span_basis(std::vector<Vec> vectors);
std::vector<std::vector<Rat>> span_basis(std::vector<std::vector<Rat>> vectors);

}  // namespace foliage
