#pragma once

#include <vector>

#include "extgraph/matrix.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

// Outcome of the feasibility problem  A x = b, x >= 0.
// Feasible: x satisfies it exactly. Infeasible: farkas is a z with
// z^T A >= 0 componentwise and z^T b < 0.
struct LpResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::vector<Rational> farkas;
  int pivots = 0;
};

// Phase-I simplex in exact arithmetic with Bland's rule (never cycles).
LpResult solve_feasibility(const DenseMatrix<Rational>& a, const std::vector<Rational>& b);

}  // namespace extgraph
