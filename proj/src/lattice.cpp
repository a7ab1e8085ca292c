#include "extgraph/lattice.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "extgraph/errors.hpp"

namespace extgraph {

std::vector<BigInt> smith_diagonal(DenseMatrix<BigInt> a) {
  const std::size_t rows = a.rows(), cols = a.cols(), k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // least nonzero |entry| in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (sgn(a(r, c)) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        std::vector<BigInt> d(k, BigInt(0));
        for (std::size_t i = 0; i < t; ++i) d[i] = a(i, i);
        return d;
      }
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      const BigInt p = a(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(a(r, t)) == 0) continue;
        BigInt q = a(r, t) / p;
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (sgn(a(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(a(t, c)) == 0) continue;
        BigInt q = a(t, c) / p;
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (sgn(a(t, c)) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (sgn(a(r, c) % p) != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
    }
    if (sgn(a(t, t)) < 0) a(t, t) = -a(t, t);
  }
  std::vector<BigInt> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = a(i, i);
  return d;
}

JacobianReport jacobian(const Graph& g) {
  if (!is_connected(g)) throw DomainError("jacobian requires a connected graph");
  const int n = g.n();
  JacobianReport rep;
  if (n > 1) {
    DenseMatrix<BigInt> red(n - 1, n - 1, BigInt(0));
    for (const Edge& e : g.edges()) {
      if (e.u < n - 1) red(e.u, e.u) += 1;
      if (e.v < n - 1) red(e.v, e.v) += 1;
      if (e.u < n - 1 && e.v < n - 1) {
        red(e.u, e.v) -= 1;
        red(e.v, e.u) -= 1;
      }
    }
    for (const BigInt& d : smith_diagonal(red)) {
      if (sgn(d) == 0) throw std::logic_error("reduced Laplacian of a connected graph is singular");
      rep.group_order *= d;
      if (d > 1) rep.invariant_factors.push_back(d);
    }
  }
  rep.regular_degree = g.regular_degree();
  rep.lattice_dimension = g.m() - n + 1;  // equals k n / 2 - n + 1 when k-regular
  rep.unnormalized_min_norm = unweighted_girth(g);
  if (rep.regular_degree && rep.unnormalized_min_norm && rep.lattice_dimension > 0) {
    long exp;
    double mant = mpz_get_d_2exp(&exp, rep.group_order.get_mpz_t());
    double log_tau = std::log(mant) + exp * std::log(2.0);
    rep.normalized_min_norm = *rep.unnormalized_min_norm * std::exp(2.0 * log_tau / rep.lattice_dimension);
  }
  return rep;
}

std::vector<GrowthRow> minimal_norm_growth_scan(const std::vector<Graph>& family, int jobs) {
  std::optional<int> k;
  for (const Graph& g : family) {
    auto d = g.regular_degree();
    if (!d) throw DomainError("growth scan needs regular graphs");
    if (k && *d != *k) throw DomainError("growth scan needs a common degree (mixed degrees given)");
    k = d;
    if (!is_connected(g)) throw DomainError("growth scan needs connected graphs");
  }
  if (k && *k < 3) throw DomainError("growth scan needs degree >= 3 (degree 2 gives a one-dimensional lattice)");
  std::vector<GrowthRow> rows(family.size());
  auto work = [&](std::size_t i) {
    const Graph& g = family[i];
    auto rep = jacobian(g);
    rows[i] = {g.n(), rep.normalized_min_norm.value_or(0.0), std::log(g.n()) / std::log(*k - 1.0)};
  };
  const std::size_t workers = std::max(1, std::min<int>(jobs, static_cast<int>(family.size())));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < family.size(); i += workers) work(i);
    });
  for (auto& t : pool) t.join();
  return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "n,nu,log_n\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", r.n, r.nu, r.log_n);
    out << buf;
  }
  return out.str();
}

}  // namespace extgraph
