#include <gtest/gtest.h>

#include <random>
#include <set>

#include "extgraph/errors.hpp"
#include "extgraph/metric.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace extgraph;

namespace {

WeightPoint unit(const Graph& g) { return WeightPoint::unweighted(g, WeightDomain::Unconstrained); }

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) { return {v.begin(), v.end()}; }

WeightPoint random_point(const Graph& g, std::mt19937& rng, bool allow_zero) {
  std::vector<Rational> x(g.m());
  for (auto& v : x) {
    v = Rational(allow_zero ? rng() % 4 : 1 + rng() % 4, 1 + rng() % 3);
    v.canonicalize();
  }
  return WeightPoint(g, x, WeightDomain::Unconstrained);
}

}  // namespace

TEST(Girth, Petersen) {
  auto c = girth(unit(make_named("petersen")));
  EXPECT_EQ(c.girth, 5);
  EXPECT_EQ(c.systoles.size(), 12u);
  auto o = oracle::cycle_oracle(unit(make_named("petersen")));
  EXPECT_EQ(as_set(c.systoles), o.systoles);
}

TEST(Girth, WeightedTriangle) {
  auto c = girth(parse_graph("3 3\n0 1 1/2\n1 2 1/2\n0 2 2"));
  EXPECT_EQ(c.girth, 3);
  ASSERT_EQ(c.systoles.size(), 1u);
  EXPECT_EQ(c.systoles[0], (std::vector<int>{0, 1, 2}));
}

TEST(Girth, K4) {
  auto c = girth(unit(make_named("complete", {4})));
  EXPECT_EQ(c.girth, 3);
  EXPECT_EQ(c.systoles.size(), 4u);
  auto inc = c.incidence(6);
  for (const auto& row : inc) EXPECT_EQ(std::accumulate(row.begin(), row.end(), 0), 2);
}

TEST(Girth, ForestRejected) {
  EXPECT_THROW(girth(unit(make_named("path", {5}))), DomainError);
}

TEST(Girth, StrictInteriorDropsZeroEdges) {
  WeightPoint w(fixtures::paw(), {2, 0, 1, 1}, WeightDomain::Full);
  EXPECT_EQ(girth(w).girth, 3);
  EXPECT_THROW(girth(w, true), DomainError);
}

TEST(Girth, SystolesAreOrderedBySmallestEdge) {
  auto c = girth(unit(make_named("hypercube", {3})));
  EXPECT_EQ(c.systoles.size(), 6u);
  for (std::size_t i = 1; i < c.systoles.size(); ++i) EXPECT_LE(c.systoles[i - 1][0], c.systoles[i][0]);
}

TEST(Girth, BruteForceEquivalence) {
  std::mt19937 rng(1);
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.m() > 16 || g.m() < g.n()) continue;
    for (int t = 0; t < 3; ++t) {
      WeightPoint w = t == 0 ? unit(g) : random_point(g, rng, false);
      auto c = girth(w);
      auto o = oracle::cycle_oracle(w);
      ASSERT_TRUE(o.girth);
      EXPECT_EQ(c.girth, *o.girth);
      EXPECT_EQ(as_set(c.systoles), o.systoles);
      EXPECT_EQ(c.systoles.size(), o.systoles.size());
    }
  }
}

TEST(Diameter, CompleteGraph) {
  auto d = diameter(unit(make_named("complete", {5})));
  EXPECT_EQ(d.diameter, 1);
  EXPECT_EQ(d.meridians.size(), 10u);
  std::set<int> used;
  for (const auto& mer : d.meridians) {
    ASSERT_EQ(mer.size(), 1u);
    used.insert(mer[0]);
  }
  EXPECT_EQ(used.size(), 10u);
}

TEST(Diameter, Cycle6) {
  auto d = diameter(unit(make_named("cycle", {6})));
  EXPECT_EQ(d.diameter, 3);
  EXPECT_EQ(d.diametral_pairs.size(), 3u);  // unordered; 6 ordered
  EXPECT_EQ(d.meridians.size(), 6u);        // two per pair
  for (int p = 0; p < 3; ++p) EXPECT_EQ(std::count(d.meridian_pair.begin(), d.meridian_pair.end(), p), 2);
}

TEST(Diameter, WeightedPath) {
  auto d = diameter(parse_graph("3 2\n0 1 1\n1 2 2"));
  EXPECT_EQ(d.diameter, 3);
  ASSERT_EQ(d.meridians.size(), 1u);
  EXPECT_EQ(d.meridians[0], (std::vector<int>{0, 1}));
}

TEST(Diameter, DisconnectedRejected) {
  EXPECT_THROW(diameter(unit(disjoint_union(make_named("cycle", {3}), make_named("cycle", {3})))), DomainError);
}

TEST(Diameter, BruteForceEquivalence) {
  std::mt19937 rng(2);
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.m() > 16) continue;
    for (int t = 0; t < 3; ++t) {
      WeightPoint w = t == 0 ? unit(g) : random_point(g, rng, false);
      auto d = diameter(w);
      auto o = oracle::path_oracle(w);
      EXPECT_EQ(d.diameter, o.diameter);
      EXPECT_EQ(static_cast<int>(d.diametral_pairs.size()), o.diametral_pairs);
      EXPECT_EQ(as_set(d.meridians), o.meridians);
    }
  }
}

TEST(Diameter, GirthBound) {
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.m() < g.n()) continue;
    auto w = unit(g);
    EXPECT_GE(diameter(w).diameter, girth(w).girth / 2 - 1);
  }
}

TEST(Metric, LipschitzInOneWeight) {
  std::mt19937 rng(4);
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.m() < g.n() || g.n() > 16) continue;
    WeightPoint w = random_point(g, rng, false);
    auto x = w.weights();
    int j = static_cast<int>(rng() % g.m());
    Rational delta(1, 1 + rng() % 5);
    x[j] += delta;
    WeightPoint v = w.with_weights(x);
    EXPECT_LE(abs(girth(v).girth - girth(w).girth), delta);
    EXPECT_LE(abs(diameter(v).diameter - diameter(w).diameter), delta);
  }
}

TEST(Cuts, K4) {
  auto r = cut_constants(unit(make_named("complete", {4})));
  EXPECT_EQ(r.expansion, Rational(1, 9));
  EXPECT_EQ(r.cheeger, Rational(2, 3));
  EXPECT_EQ(r.expansion_cuts.size(), 7u);  // 4 singletons + 3 pairs
  EXPECT_EQ(r.cheeger_cuts.size(), 3u);
  for (const auto& c : r.cheeger_cuts) EXPECT_EQ(c.side_a.size(), 2u);
}

TEST(Cuts, C4) {
  auto r = cut_constants(unit(make_named("cycle", {4})));
  EXPECT_EQ(r.cheeger, Rational(1, 2));
  EXPECT_EQ(r.expansion, Rational(1, 8));
}

TEST(Cuts, SingleEdge) {
  auto r = cut_constants(unit(make_named("path", {2})));
  EXPECT_EQ(r.expansion, 1);
  EXPECT_EQ(r.cheeger, 1);
  ASSERT_EQ(r.expansion_cuts.size(), 1u);
  EXPECT_EQ(r.expansion_cuts[0].volume_a, 1);
  EXPECT_EQ(r.expansion_cuts[0].volume_b, 1);
}

TEST(Cuts, TooLarge) {
  EXPECT_THROW(cut_constants(unit(make_named("cycle", {25}))), DomainError);
}

TEST(Cuts, BruteForceEquivalence) {
  std::mt19937 rng(6);
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.n() > 12) continue;
    for (int t = 0; t < 3; ++t) {
      WeightPoint w = t == 0 ? unit(g) : random_point(g, rng, t == 2);
      auto r = cut_constants(w);
      auto o = oracle::cut_oracle(w);
      EXPECT_EQ(r.expansion, o.expansion);
      EXPECT_EQ(r.cheeger, o.cheeger);
      EXPECT_EQ(static_cast<int>(r.expansion_cuts.size()), o.expansion_count);
      EXPECT_EQ(static_cast<int>(r.cheeger_cuts.size()), o.cheeger_count);
      for (const auto& c : r.expansion_cuts) EXPECT_EQ(c.cut_weight / (c.volume_a * c.volume_b), r.expansion);
    }
  }
}

TEST(Cuts, LargeWeightsUseBigIntegers) {
  Graph g = make_named("cycle", {5});
  std::vector<Rational> x = {Rational(1, 1000003), Rational(1, 999983), 1, 2, 3};
  WeightPoint w(g, x, WeightDomain::Unconstrained);
  auto r = cut_constants(w);
  auto o = oracle::cut_oracle(w);
  EXPECT_EQ(r.expansion, o.expansion);
  EXPECT_EQ(r.cheeger, o.cheeger);
}

TEST(Cuts, AddingAnEdgeNeverLowersCutWeight) {
  Graph c6 = make_named("cycle", {6});
  auto edges = c6.edges();
  edges.push_back({0, 3});
  Graph h(6, edges);
  for (std::uint32_t mask = 1; mask < 32; ++mask) {
    Rational a = 0, b = 0;
    for (int j = 0; j < c6.m(); ++j)
      if (((mask >> c6.edge(j).u) & 1) != ((mask >> c6.edge(j).v) & 1)) a += 1;
    for (int j = 0; j < h.m(); ++j)
      if (((mask >> h.edge(j).u) & 1) != ((mask >> h.edge(j).v) & 1)) b += 1;
    EXPECT_GE(b, a);
  }
}
