#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "extgraph/errors.hpp"
#include "extgraph/lattice.hpp"
#include "extgraph/spectral.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace extgraph;

namespace {

std::vector<std::vector<BigInt>> reduced_laplacian(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<BigInt>> a(n - 1, std::vector<BigInt>(n - 1, BigInt(0)));
  for (const Edge& e : g.edges()) {
    if (e.u < n - 1) a[e.u][e.u] += 1;
    if (e.v < n - 1) a[e.v][e.v] += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  return a;
}

}  // namespace

TEST(Jacobian, K4) {
  auto r = jacobian(make_family("complete:4"));
  EXPECT_EQ(r.invariant_factors, (std::vector<BigInt>{4, 4}));
  EXPECT_EQ(r.group_order, 16);
  EXPECT_EQ(r.lattice_dimension, 3);
  EXPECT_EQ(r.unnormalized_min_norm, 3);
  ASSERT_TRUE(r.normalized_min_norm);
  EXPECT_NEAR(*r.normalized_min_norm, 3 * std::pow(16.0, 2.0 / 3), 1e-9);
  EXPECT_NEAR(*r.normalized_min_norm, 19.05, 0.005);
  EXPECT_EQ(oracle::smith_by_minors(reduced_laplacian(make_family("complete:4"))), r.invariant_factors);
}

TEST(Jacobian, Petersen) {
  Graph g = make_family("petersen");
  auto r = jacobian(g);
  EXPECT_EQ(r.group_order, 2000);
  EXPECT_EQ(r.lattice_dimension, 6);
  EXPECT_EQ(r.unnormalized_min_norm, 5);
  EXPECT_NEAR(*r.normalized_min_norm, 5 * std::cbrt(2000.0), 1e-9);
  EXPECT_NEAR(*r.normalized_min_norm, 62.996, 0.001);
  EXPECT_EQ(oracle::smith_by_minors(reduced_laplacian(g)), r.invariant_factors);
}

TEST(Jacobian, TreesAreTrivial) {
  for (const char* f : {"path:2", "path:7"}) {
    auto r = jacobian(make_family(f));
    EXPECT_TRUE(r.invariant_factors.empty());
    EXPECT_EQ(r.group_order, 1);
    EXPECT_FALSE(r.unnormalized_min_norm);
    EXPECT_FALSE(r.normalized_min_norm);
  }
  auto star = jacobian(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(star.group_order, 1);
  EXPECT_EQ(star.lattice_dimension, 0);
}

TEST(Jacobian, Cycles) {
  for (int n = 3; n <= 12; ++n) {
    auto r = jacobian(make_named("cycle", {n}));
    EXPECT_EQ(r.invariant_factors, (std::vector<BigInt>{BigInt(n)}));
    EXPECT_EQ(r.lattice_dimension, 1);
    EXPECT_EQ(r.unnormalized_min_norm, n);
  }
}

TEST(Jacobian, OrderIsTreeNumberAndChainDivides) {
  for (const Graph& g : fixtures::identity_fixtures()) {
    auto r = jacobian(g);
    EXPECT_EQ(Rational(r.group_order), tree_number_exact(WeightPoint::unweighted(g)));
    BigInt prod = 1;
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
      prod *= r.invariant_factors[i];
      EXPECT_GT(r.invariant_factors[i], 1);
      if (i + 1 < r.invariant_factors.size()) EXPECT_EQ(r.invariant_factors[i + 1] % r.invariant_factors[i], 0);
    }
    EXPECT_EQ(prod, r.group_order);
    if (r.regular_degree) EXPECT_EQ(r.lattice_dimension, *r.regular_degree * g.n() / 2 - g.n() + 1);
  }
}

TEST(Jacobian, SmallFixturesMatchMinorsOracle) {
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.n() > 9) continue;
    EXPECT_EQ(oracle::smith_by_minors(reduced_laplacian(g)), jacobian(g).invariant_factors);
  }
}

TEST(Jacobian, NonRegularOmitsNormalizedNorm) {
  auto r = jacobian(fixtures::paw());
  EXPECT_FALSE(r.regular_degree);
  EXPECT_FALSE(r.normalized_min_norm);
  EXPECT_EQ(r.lattice_dimension, 1);
  EXPECT_EQ(r.unnormalized_min_norm, 3);
}

TEST(Jacobian, Disconnected) {
  EXPECT_THROW(jacobian(disjoint_union(make_family("cycle:3"), make_family("cycle:4"))), DomainError);
}

TEST(Smith, RandomMatricesMatchMinorsOracle) {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + t % 5;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    DenseMatrix<BigInt> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = a[i][j] = static_cast<int>(rng() % 13) - 6;
    auto diag = smith_diagonal(m);
    std::vector<BigInt> nontrivial;
    for (const auto& d : diag) {
      EXPECT_GE(d, 0);
      if (d > 1) nontrivial.push_back(d);
    }
    EXPECT_EQ(nontrivial, oracle::smith_by_minors(a));
    BigInt det = 1;
    for (const auto& d : diag) det *= d;
    EXPECT_EQ(det, abs(oracle::int_det(a)));
  }
}

TEST(Smith, RectangularAndZero) {
  DenseMatrix<BigInt> a(2, 3, BigInt(0));
  a(0, 0) = 2;
  a(1, 1) = 3;
  EXPECT_EQ(smith_diagonal(a), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(smith_diagonal(DenseMatrix<BigInt>(2, 2, BigInt(0))), (std::vector<BigInt>{0, 0}));
}

TEST(GrowthScan, Rows) {
  std::vector<Graph> fam = {make_family("complete:4"), make_family("complete_bipartite:3,3"), make_family("petersen"),
                            make_family("heawood")};
  auto rows = minimal_norm_growth_scan(fam);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, fam[i].n());
    EXPECT_GT(rows[i].nu, 0);
    EXPECT_NEAR(rows[i].log_n, std::log2(fam[i].n()), 1e-12);
  }
  auto again = minimal_norm_growth_scan(fam, 3);
  EXPECT_EQ(growth_csv(rows), growth_csv(again));
  EXPECT_EQ(growth_csv(rows).substr(0, 12), "n,nu,log_n\n4");
}

TEST(GrowthScan, SingleRowAndRejections) {
  EXPECT_EQ(minimal_norm_growth_scan({make_family("petersen")}).size(), 1u);
  EXPECT_THROW(minimal_norm_growth_scan({make_family("cycle:5"), make_family("cycle:6")}), DomainError);
  EXPECT_THROW(minimal_norm_growth_scan({make_family("petersen"), make_family("complete:5")}), DomainError);
  EXPECT_THROW(minimal_norm_growth_scan({fixtures::paw()}), DomainError);
}
