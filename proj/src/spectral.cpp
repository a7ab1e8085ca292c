#include "extgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extgraph/errors.hpp"
#include "extgraph/exact_linalg.hpp"

namespace extgraph {

const char* to_string(TreeMethod m) {
  switch (m) {
    case TreeMethod::Cofactor: return "COFACTOR";
    case TreeMethod::Temperley: return "TEMPERLEY";
    case TreeMethod::Spectral: return "SPECTRAL";
  }
  return "?";
}

DenseMatrix<Rational> laplacian(const WeightPoint& w) {
  const Graph& g = w.graph();
  DenseMatrix<Rational> lap(g.n(), g.n(), Rational(0));
  for (int j = 0; j < g.m(); ++j) {
    auto [u, v] = g.edge(j);
    lap(u, u) += w.weight(j);
    lap(v, v) += w.weight(j);
    lap(u, v) -= w.weight(j);
    lap(v, u) -= w.weight(j);
  }
  return lap;
}

DenseMatrix<Rational> adjacency(const WeightPoint& w) {
  const Graph& g = w.graph();
  DenseMatrix<Rational> adj(g.n(), g.n(), Rational(0));
  for (int j = 0; j < g.m(); ++j) {
    auto [u, v] = g.edge(j);
    adj(u, v) = w.weight(j);
    adj(v, u) = w.weight(j);
  }
  return adj;
}

Eigen::MatrixXd laplacian_double(const Graph& g, const std::vector<double>& weights) {
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (int j = 0; j < g.m(); ++j) {
    auto [u, v] = g.edge(j);
    lap(u, u) += weights[j];
    lap(v, v) += weights[j];
    lap(u, v) -= weights[j];
    lap(v, u) -= weights[j];
  }
  return lap;
}

Eigen::MatrixXd laplacian_double(const WeightPoint& w) { return laplacian_double(w.graph(), w.weights_as_double()); }

SpectrumReport spectrum(const WeightPoint& w, double eigentol) {
  if (!(eigentol > 0)) throw DomainError("spectrum: eigentol must be positive");
  const Graph& g = w.graph();
  SpectrumReport rep;
  if (g.n() == 0) return rep;
  Eigen::MatrixXd lap = laplacian_double(w);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(g.n(), g.n());
  auto wd = w.weights_as_double();
  for (int j = 0; j < g.m(); ++j) {
    adj(g.edge(j).u, g.edge(j).v) = wd[j];
    adj(g.edge(j).v, g.edge(j).u) = wd[j];
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ls(lap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> as(adj, Eigen::EigenvaluesOnly);
  if (ls.info() != Eigen::Success || as.info() != Eigen::Success)
    throw DomainError("spectrum: eigen-solver did not converge");

  const Eigen::VectorXd& mu = ls.eigenvalues();
  rep.laplacian.assign(mu.data(), mu.data() + mu.size());
  rep.laplacian_vectors = ls.eigenvectors();
  const Eigen::VectorXd& lam = as.eigenvalues();
  rep.adjacency.assign(lam.data(), lam.data() + lam.size());
  std::sort(rep.adjacency.rbegin(), rep.adjacency.rend());

  double norm = std::max({1.0, std::abs(rep.laplacian.front()), std::abs(rep.laplacian.back())});
  for (int i = 0; i < g.n(); ++i) {
    double r = (lap * rep.laplacian_vectors.col(i) - mu[i] * rep.laplacian_vectors.col(i)).norm() / norm;
    rep.max_residual = std::max(rep.max_residual, r);
  }
  if (rep.max_residual > eigentol)
    throw DomainError("spectrum: eigenpair residual " + std::to_string(rep.max_residual) + " exceeds tolerance");

  rep.cluster_tol = kClusterTol * norm;
  rep.clusters.push_back({0});
  for (int i = 1; i < g.n(); ++i) {
    if (rep.laplacian[i] - rep.laplacian[i - 1] <= rep.cluster_tol)
      rep.clusters.back().push_back(i);
    else
      rep.clusters.push_back({i});
  }
  return rep;
}

namespace {

// Exact tree number for arbitrary nonnegative rational weights (no domain check).
Rational tau_of(const Graph& g, const std::vector<Rational>& weights, TreeMethod method) {
  const int n = g.n();
  if (n == 0) return 0;
  BigInt d = lcm_of_denominators(weights);
  std::vector<BigInt> iw(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) iw[j] = Rational(weights[j] * d).get_num();

  if (method == TreeMethod::Cofactor) {
    if (n == 1) return 1;
    DenseMatrix<BigInt> red(n - 1, n - 1, BigInt(0));
    for (int j = 0; j < g.m(); ++j) {
      int u = g.edge(j).u - 1, v = g.edge(j).v - 1;
      if (u >= 0) red(u, u) += iw[j];
      if (v >= 0) red(v, v) += iw[j];
      if (u >= 0 && v >= 0) {
        red(u, v) -= iw[j];
        red(v, u) -= iw[j];
      }
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n - 1));
    Rational t(bareiss_determinant(std::move(red)), scale);
    t.canonicalize();
    return t;
  }
  if (method == TreeMethod::Temperley) {
    DenseMatrix<BigInt> m(n, n, d);  // D * J
    for (int j = 0; j < g.m(); ++j) {
      auto [u, v] = g.edge(j);
      m(u, u) += iw[j];
      m(v, v) += iw[j];
      m(u, v) -= iw[j];
      m(v, u) -= iw[j];
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
    scale *= BigInt(n) * BigInt(n);
    Rational t(bareiss_determinant(std::move(m)), scale);
    t.canonicalize();
    return t;
  }
  throw DomainError("exact tree number requires the COFACTOR or TEMPERLEY method");
}

}  // namespace

Rational tree_number_exact(const WeightPoint& w, TreeMethod method) { return tau_of(w.graph(), w.weights(), method); }

BigInt tree_count(const Graph& g) {
  if (g.n() <= 1) return g.n();
  const int n = g.n();
  DenseMatrix<BigInt> red(n - 1, n - 1, BigInt(0));
  for (const Edge& e : g.edges()) {
    int u = e.u - 1, v = e.v - 1;
    if (u >= 0) red(u, u) += 1;
    if (v >= 0) red(v, v) += 1;
    if (u >= 0 && v >= 0) {
      red(u, v) -= 1;
      red(v, u) -= 1;
    }
  }
  return bareiss_determinant(std::move(red));
}

BigInt tree_count_from_laplacian(const DenseMatrix<BigInt>& lap) {
  if (lap.rows() == 0) return 0;
  if (lap.rows() == 1) return 1;
  return bareiss_determinant(lap.minor_matrix(0, 0));
}

double tree_number_spectral(const WeightPoint& w) {
  const int n = w.graph().n();
  if (n == 0) return 0.0;
  if (n == 1) return 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ls(laplacian_double(w), Eigen::EigenvaluesOnly);
  if (ls.info() != Eigen::Success) throw DomainError("spectrum: eigen-solver did not converge");
  const auto& mu = ls.eigenvalues();
  double log_sum = 0.0;
  for (int j = 1; j < n; ++j) {
    if (mu[j] <= 0) return 0.0;
    log_sum += std::log(mu[j]);
  }
  return std::exp(log_sum - std::log(static_cast<double>(n)));
}

TreeReport tree_number(const WeightPoint& w, TreeMethod method) {
  TreeReport rep;
  rep.method = method;
  if (method == TreeMethod::Spectral) {
    rep.tau_approx = tree_number_spectral(w);
    rep.connected = rep.tau_approx > 0;
    return rep;
  }
  const Graph& g = w.graph();
  rep.tau = tau_of(g, w.weights(), method);
  rep.tau_approx = rep.tau.get_d();
  rep.connected = sgn(rep.tau) > 0;
  rep.per_edge_tau.resize(g.m());
  std::vector<Rational> bumped = w.weights();
  for (int j = 0; j < g.m(); ++j) {
    bumped[j] += 1;
    rep.per_edge_tau[j] = tau_of(g, bumped, method) - rep.tau;
    bumped[j] -= 1;
  }
  if (rep.connected) {
    rep.resistances.resize(g.m());
    for (int j = 0; j < g.m(); ++j) rep.resistances[j] = rep.per_edge_tau[j] / rep.tau;
  }
  return rep;
}

std::vector<Rational> effective_resistances(const WeightPoint& w) {
  auto rep = tree_number(w, TreeMethod::Cofactor);
  if (!rep.connected) throw DomainError("effective resistances are undefined: tau = 0");
  return rep.resistances;
}

std::vector<double> resistances_pseudoinverse(const Graph& g, const std::vector<double>& weights) {
  const int n = g.n();
  Eigen::MatrixXd lap = laplacian_double(g, weights);
  Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd pinv = (lap + j).inverse() - j;
  std::vector<double> r(g.m());
  for (int k = 0; k < g.m(); ++k) {
    auto [u, v] = g.edge(k);
    r[k] = pinv(u, u) + pinv(v, v) - 2 * pinv(u, v);
  }
  return r;
}

std::vector<double> resistances_pseudoinverse(const WeightPoint& w) {
  return resistances_pseudoinverse(w.graph(), w.weights_as_double());
}

double log_tree_number(const Graph& g, const std::vector<double>& weights) {
  const int n = g.n();
  if (n <= 1) return 0.0;
  Eigen::MatrixXd lap = laplacian_double(g, weights);
  Eigen::MatrixXd red = lap.bottomRightCorner(n - 1, n - 1);
  Eigen::LLT<Eigen::MatrixXd> llt(red);
  if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  const auto& l = llt.matrixLLT();
  for (int i = 0; i < n - 1; ++i) {
    if (!(l(i, i) > 0)) return -std::numeric_limits<double>::infinity();
    s += 2 * std::log(l(i, i));
  }
  return s;
}

EquiarborealReport equiarboreal_test(const Graph& g) {
  if (!is_connected(g)) throw DomainError("equiarboreal_test: graph is disconnected");
  auto rep = tree_number(WeightPoint::unweighted(g, WeightDomain::Full), TreeMethod::Cofactor);
  EquiarborealReport out;
  out.tau = rep.tau.get_num();
  out.per_edge_tree_counts.reserve(g.m());
  for (const auto& t : rep.per_edge_tau) out.per_edge_tree_counts.push_back(t.get_num());
  out.is_equiarboreal = std::all_of(out.per_edge_tree_counts.begin(), out.per_edge_tree_counts.end(),
                                    [&](const BigInt& c) { return c == out.per_edge_tree_counts.front(); });
  BigInt prod = BigInt(g.n() - 1) * out.tau;
  out.divisibility_ok = g.m() > 0 && mpz_divisible_ui_p(prod.get_mpz_t(), static_cast<unsigned long>(g.m())) != 0;
  return out;
}

BigInt moore_bound(int k, int girth) {
  if (k == 2) throw DomainError("moore_bound: k = 2 makes the formula divide by zero");
  if (k < 3 || girth < 3) throw DomainError("moore_bound requires k >= 3 and g >= 3");
  BigInt p;
  BigInt base = k - 1;
  if (girth % 2 == 1) {
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((girth - 1) / 2));
    BigInt num = BigInt(k) * (p - 1);
    return 1 + BigInt(num / (k - 2));
  }
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(girth / 2));
  BigInt num = 2 * (p - 1);
  return BigInt(num / (k - 2));
}

SigmaValue mckay_sigma(int k) {
  if (k < 3) throw DomainError("mckay_sigma requires k >= 3");
  BigInt num, den;
  BigInt km1 = k - 1, kk2 = BigInt(k) * (k - 2);
  mpz_pow_ui(num.get_mpz_t(), km1.get_mpz_t(), static_cast<unsigned long>(2 * (k - 1)));
  mpz_pow_ui(den.get_mpz_t(), kk2.get_mpz_t(), static_cast<unsigned long>(k - 2));
  SigmaValue out;
  out.squared = Rational(num, den);
  out.squared.canonicalize();
  out.value = std::exp((k - 1) * std::log(k - 1.0) - (k / 2.0 - 1) * std::log(static_cast<double>(k) * (k - 2)));
  const BigInt& sn = out.squared.get_num();
  const BigInt& sd = out.squared.get_den();
  if (mpz_perfect_square_p(sn.get_mpz_t()) && mpz_perfect_square_p(sd.get_mpz_t())) {
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), sn.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), sd.get_mpz_t());
    out.exact = Rational(rn, rd);
    out.value = out.exact->get_d();
  }
  return out;
}

RamanujanReport is_ramanujan(const Graph& g, double eigentol) {
  auto k = g.regular_degree();
  if (!k) throw DomainError("is_ramanujan: graph is not regular");
  if (!is_connected(g)) throw DomainError("is_ramanujan: graph is disconnected");
  RamanujanReport rep;
  rep.degree = *k;
  rep.bound = 2 * std::sqrt(std::max(0, *k - 1));
  auto sp = spectrum(WeightPoint::unweighted(g, WeightDomain::Full));
  for (double lam : sp.adjacency) {
    if (std::abs(lam - *k) <= eigentol || std::abs(lam + *k) <= eigentol) continue;
    if (std::abs(lam) > rep.bound + eigentol) rep.offending_eigenvalues.push_back(lam);
  }
  rep.verdict = rep.offending_eigenvalues.empty();
  return rep;
}

}  // namespace extgraph
