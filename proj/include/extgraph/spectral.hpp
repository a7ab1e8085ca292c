#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "extgraph/graph.hpp"
#include "extgraph/matrix.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

/// Eigen-decomposition of the weighted adjacency and Laplacian matrices.
///
/// Laplacian eigenvalues are ascending (mu_0 = 0 for every graph), adjacency
/// eigenvalues descending. `laplacian_vectors.col(i)` is a unit eigenvector for
/// `laplacian[i]`. Clusters group Laplacian indices whose eigenvalues differ by
/// at most `cluster_tol`.
struct SpectrumReport {
  std::vector<double> adjacency;
  std::vector<double> laplacian;
  Eigen::MatrixXd laplacian_vectors;
  std::vector<std::vector<int>> clusters;
  double max_residual = 0.0;  // max_i ||L v_i - mu_i v_i|| / ||L||
  double cluster_tol = 0.0;
};

enum class TreeMethod { Cofactor, Temperley, Spectral };

const char* to_string(TreeMethod m);

/// Tree number and its per-edge derivatives.
///
/// `per_edge_tau[j]` is d tau / d x_j (the weighted count of spanning trees
/// through e_j with e_j's own weight removed). `resistances` holds tau_j / tau
/// and is empty when tau == 0. For the spectral method only `tau_approx` is set.
struct TreeReport {
  TreeMethod method = TreeMethod::Cofactor;
  Rational tau = 0;
  double tau_approx = 0.0;
  std::vector<Rational> per_edge_tau;
  std::vector<Rational> resistances;
  bool connected = false;
};

constexpr double kDefaultEigenTol = 1e-10;
constexpr double kClusterTol = 1e-7;

DenseMatrix<Rational> laplacian(const WeightPoint& w);
DenseMatrix<Rational> adjacency(const WeightPoint& w);
Eigen::MatrixXd laplacian_double(const WeightPoint& w);
Eigen::MatrixXd laplacian_double(const Graph& g, const std::vector<double>& weights);

// Throws DomainError if the residual check fails at eigentol * ||L||.
SpectrumReport spectrum(const WeightPoint& w, double eigentol = kDefaultEigenTol);

// Exact tree number only. Cofactor: (0,0) cofactor of L. Temperley: det(J+L)/n^2.
Rational tree_number_exact(const WeightPoint& w, TreeMethod method = TreeMethod::Cofactor);
// Unweighted tree count by the cofactor route.
BigInt tree_count(const Graph& g);
// Tree number of a multigraph given by its integer Laplacian (rows sum to 0).
BigInt tree_count_from_laplacian(const DenseMatrix<BigInt>& lap);
// Kirchhoff: prod_{j>=1} mu_j / n.
double tree_number_spectral(const WeightPoint& w);

// Full report; per-edge values use tau(x + e_j) - tau(x) (tau is multilinear).
TreeReport tree_number(const WeightPoint& w, TreeMethod method = TreeMethod::Cofactor);

// tau_j / tau for every edge. Throws DomainError if tau == 0.
std::vector<Rational> effective_resistances(const WeightPoint& w);
// R(u,v) = L+_uu + L+_vv - 2 L+_uv from the Laplacian pseudo-inverse.
std::vector<double> resistances_pseudoinverse(const WeightPoint& w);
std::vector<double> resistances_pseudoinverse(const Graph& g, const std::vector<double>& weights);
// log tau in floating point via Cholesky of the reduced Laplacian; -inf if singular.
double log_tree_number(const Graph& g, const std::vector<double>& weights);

struct EquiarborealReport {
  bool is_equiarboreal = false;
  std::vector<BigInt> per_edge_tree_counts;
  BigInt tau = 0;
  bool divisibility_ok = false;  // m | (n-1) tau
};

EquiarborealReport equiarboreal_test(const Graph& g);

// f_0(k, g): smallest possible vertex count of a k-regular graph of girth g.
BigInt moore_bound(int k, int girth);

/// McKay's constant (k-1)^(k-1) / (k(k-2))^(k/2-1).
///
/// `squared` is always rational; `exact` is set when the value itself is
/// rational (even k, or odd k with a square `squared`).
struct SigmaValue {
  double value = 0.0;
  Rational squared = 0;
  std::optional<Rational> exact;
};

SigmaValue mckay_sigma(int k);

struct RamanujanReport {
  bool verdict = false;
  int degree = 0;
  double bound = 0.0;  // 2 sqrt(k-1)
  std::vector<double> offending_eigenvalues;
};

RamanujanReport is_ramanujan(const Graph& g, double eigentol = 1e-9);

}  // namespace extgraph
