#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extgraph/graph.hpp"
#include "extgraph/matrix.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

// Diagonal of the Smith normal form (all of it, including 1s and 0s).
// Exact elimination, pivoting on the entry of least absolute value.
std::vector<BigInt> smith_diagonal(DenseMatrix<BigInt> a);

struct JacobianReport {
  std::vector<BigInt> invariant_factors;  // entries > 1, each dividing the next
  BigInt group_order = 1;
  int lattice_dimension = 0;               // k n / 2 - n + 1 (m - n + 1 if not regular)
  std::optional<int> regular_degree;
  std::optional<int> unnormalized_min_norm;  // the girth; none for trees
  std::optional<double> normalized_min_norm; // girth * tau^(2 / dim), regular graphs only
};

// Critical group: cokernel of the reduced Laplacian. Throws DomainError if g
// is disconnected.
JacobianReport jacobian(const Graph& g);

struct GrowthRow {
  int n = 0;
  double nu = 0.0;
  double log_n = 0.0;  // log base (k - 1) of n
};

// Requires connected k-regular graphs sharing one k >= 3. Rows follow the
// input order; `jobs` threads compute them.
std::vector<GrowthRow> minimal_norm_growth_scan(const std::vector<Graph>& family, int jobs = 1);
std::string growth_csv(const std::vector<GrowthRow>& rows);

}  // namespace extgraph
