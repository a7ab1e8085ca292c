#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "extgraph/errors.hpp"
#include "extgraph/extremal.hpp"
#include "extgraph/metric.hpp"
#include "extgraph/spectral.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace extgraph;

namespace {

WeightPoint omega(const Graph& g, WeightDomain d = WeightDomain::Full) { return WeightPoint::unweighted(g, d); }

// C4 0-1-2-3 with a triangle 0-1-4 on top.
Graph house() { return Graph(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}); }

// C4 with chord 0-2 and a pendant vertex on 1.
Graph chorded_square_with_tail() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 4}}); }

WeightPoint perturbed(const WeightPoint& w, const ExtremalCertificate& c) {
  auto x = w.weights();
  for (std::size_t j = 0; j < x.size(); ++j) x[j] += c.epsilon * c.direction[j];
  return WeightPoint(w.graph(), x, WeightDomain::Unconstrained);
}

// c >= 0 with sum over sets containing each edge equal to 1.
// `sets` is the library's ordering and must match the oracle's set.
bool cone_identity(const std::set<std::vector<int>>& expected, const std::vector<std::vector<int>>& sets,
                   const ExtremalCertificate& c, int m) {
  if (std::set<std::vector<int>>(sets.begin(), sets.end()) != expected) return false;
  if (sets.size() != c.cone.size()) return false;
  std::vector<oracle::Q> lhs(m, 0);
  std::size_t k = 0;
  for (const auto& s : sets) {
    if (c.cone[k] < 0) return false;
    for (int j : s) lhs[j] += c.cone[k];
    ++k;
  }
  return std::all_of(lhs.begin(), lhs.end(), [](const oracle::Q& v) { return v == 1; });
}

double tau_double(const std::vector<std::vector<int>>& trees, const std::vector<double>& x) {
  double s = 0;
  for (const auto& t : trees) {
    double p = 1;
    for (int j : t) p *= x[j];
    s += p;
  }
  return s;
}

std::vector<std::vector<int>> all_trees(const Graph& g) {
  std::vector<std::vector<int>> out;
  oracle::for_each_spanning_tree(g, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  for (;;) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::uniform_real_distribution<>(0, 1)(rng) < p) e.push_back({i, j});
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST(GirthCertificate, ExtremalFamilies) {
  for (const char* f : {"cycle:3", "cycle:5", "complete:4", "petersen", "heawood", "hypercube:3",
                        "complete_bipartite:3,3"}) {
    Graph g = make_family(f);
    auto w = omega(g);
    auto c = certify_girth_max(w);
    EXPECT_EQ(c.verdict, Verdict::LocalExtremum) << f;
    EXPECT_FALSE(c.experimental);
    auto o = oracle::cycle_oracle(w);
    EXPECT_EQ(c.value_before, *o.girth) << f;
    EXPECT_TRUE(cone_identity(o.systoles, girth(w, true).systoles, c, g.m())) << f;
    EXPECT_TRUE(verify_certificate(w, c)) << f;
  }
}

TEST(GirthCertificate, PawIsNotExtremal) {
  Graph g = fixtures::paw();
  auto w = omega(g);
  auto c = certify_girth_max(w);
  ASSERT_EQ(c.verdict, Verdict::NotExtremum);
  EXPECT_EQ(sum(c.direction), 0);
  Rational big = 0;
  for (const auto& y : c.direction) big = std::max(big, Rational(abs(y)));
  EXPECT_EQ(big, 1);
  auto after = oracle::cycle_oracle(perturbed(w, c));
  EXPECT_GT(*after.girth, 3);
  EXPECT_EQ(*after.girth, c.value_after);
  EXPECT_TRUE(verify_certificate(w, c));
}

TEST(GirthCertificate, BridgeMakesItNotExtremal) {
  auto w = omega(fixtures::bridged_triangles());
  auto c = certify_girth_max(w);
  ASSERT_EQ(c.verdict, Verdict::NotExtremum);
  EXPECT_GT(*oracle::cycle_oracle(perturbed(w, c)).girth, 3);
}

TEST(GirthCertificate, ConeMeansNoTangentDirectionImproves) {
  std::mt19937 rng(11);
  for (const char* f : {"petersen", "complete:4", "hypercube:3", "cycle:5"}) {
    Graph g = make_family(f);
    auto w = omega(g);
    ASSERT_EQ(certify_girth_max(w).verdict, Verdict::LocalExtremum);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> y(g.m());
      for (auto& v : y) {
        v = Rational(static_cast<int>(rng() % 21) - 10, 1000);
        v.canonicalize();
      }
      Rational mean = sum(y) / g.m();
      auto x = w.weights();
      for (int j = 0; j < g.m(); ++j) x[j] += y[j] - mean;
      auto o = oracle::cycle_oracle(WeightPoint(g, x, WeightDomain::Full));
      EXPECT_LE(*o.girth, certify_girth_max(w).value_before) << f;
    }
  }
}

TEST(GirthCertificate, RandomGraphsAgreeWithOracle) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_connected(rng, 4 + t % 4, 0.6);
    if (g.m() < g.n()) continue;
    auto w = omega(g);
    auto c = certify_girth_max(w);
    if (c.verdict == Verdict::LocalExtremum) {
      EXPECT_TRUE(cone_identity(oracle::cycle_oracle(w).systoles, girth(w, true).systoles, c, g.m()));
    } else {
      EXPECT_GT(*oracle::cycle_oracle(perturbed(w, c)).girth, c.value_before);
    }
  }
}

TEST(GirthCertificate, WeightedPointIsExperimental) {
  Graph g = make_family("cycle:4");
  WeightPoint w(g, {Rational(1, 2), Rational(3, 2), 1, 1}, WeightDomain::Full);
  auto c = certify_girth_max(w);
  EXPECT_TRUE(c.experimental);
  EXPECT_EQ(c.verdict, Verdict::LocalExtremum);
}

TEST(GirthCertificate, BoundaryRejected) {
  WeightPoint w(fixtures::paw(), {2, 1, 1, 0}, WeightDomain::Full);
  EXPECT_THROW(certify_girth_max(w), DomainError);
  EXPECT_THROW(certify_diameter_min(w), DomainError);
}

TEST(DiameterCertificate, ExtremalFamilies) {
  for (const char* f : {"complete:5", "cycle:5", "cycle:6", "petersen", "heawood", "hypercube:3",
                        "complete_bipartite:3,3"}) {
    Graph g = make_family(f);
    auto w = omega(g);
    auto c = certify_diameter_min(w);
    EXPECT_EQ(c.verdict, Verdict::LocalExtremum) << f;
    auto o = oracle::path_oracle(w);
    EXPECT_EQ(c.value_before, o.diameter);
    EXPECT_TRUE(cone_identity(o.meridians, diameter(w, true).meridians, c, g.m())) << f;
    EXPECT_TRUE(verify_certificate(w, c));
  }
}

TEST(DiameterCertificate, ChordedSquareWithTail) {
  auto w = omega(chorded_square_with_tail());
  auto c = certify_diameter_min(w);
  ASSERT_EQ(c.verdict, Verdict::NotExtremum);
  EXPECT_EQ(c.value_before, 3);
  auto after = oracle::path_oracle(perturbed(w, c));
  EXPECT_LT(after.diameter, 3);
  EXPECT_EQ(after.diameter, c.value_after);
  EXPECT_TRUE(verify_certificate(w, c));
}

TEST(DiameterCertificate, RandomGraphsAgreeWithOracle) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_connected(rng, 4 + t % 4, 0.5);
    auto w = omega(g);
    auto c = certify_diameter_min(w);
    if (c.verdict == Verdict::LocalExtremum)
      EXPECT_TRUE(cone_identity(oracle::path_oracle(w).meridians, diameter(w, true).meridians, c, g.m()));
    else
      EXPECT_LT(oracle::path_oracle(perturbed(w, c)).diameter, c.value_before);
  }
}

TEST(CutCertificate, SymmetricGraphsAreExtremal) {
  for (const char* f : {"cycle:5", "complete:4", "petersen", "hypercube:3", "complete_bipartite:3,3"}) {
    Graph g = make_family(f);
    auto w = omega(g, WeightDomain::DegreePreserving);
    for (CutKind k : {CutKind::Expansion, CutKind::Cheeger}) {
      auto c = certify_cut_max(w, k);
      EXPECT_EQ(c.verdict, Verdict::LocalExtremum) << f;
      EXPECT_TRUE(verify_certificate(w, c)) << f;
      EXPECT_EQ(sum(c.cone), 1);
    }
  }
}

TEST(CutCertificate, HouseIsNotExtremal) {
  Graph g = house();
  auto w = omega(g, WeightDomain::DegreePreserving);
  auto before = oracle::cut_oracle(w);
  for (CutKind k : {CutKind::Expansion, CutKind::Cheeger}) {
    auto c = certify_cut_max(w, k);
    ASSERT_EQ(c.verdict, Verdict::NotExtremum);
    std::vector<Rational> at(g.n(), Rational(0));
    for (int j = 0; j < g.m(); ++j) {
      at[g.edge(j).u] += c.direction[j];
      at[g.edge(j).v] += c.direction[j];
    }
    for (const auto& v : at) EXPECT_EQ(v, 0);
    auto p = perturbed(w, c);
    auto after = oracle::cut_oracle(p);
    if (k == CutKind::Expansion) {
      EXPECT_EQ(c.value_before, before.expansion);
      EXPECT_GT(after.expansion, before.expansion);
    } else {
      EXPECT_EQ(c.value_before, before.cheeger);
      EXPECT_GT(after.cheeger, before.cheeger);
    }
    EXPECT_TRUE(verify_certificate(w, c));
  }
}

TEST(CutCertificate, RandomGraphsAgreeWithOracle) {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_connected(rng, 4 + t % 4, 0.6);
    auto w = omega(g, WeightDomain::DegreePreserving);
    auto before = oracle::cut_oracle(w);
    for (CutKind k : {CutKind::Expansion, CutKind::Cheeger}) {
      auto c = certify_cut_max(w, k);
      if (c.verdict == Verdict::NotExtremum) {
        auto after = oracle::cut_oracle(perturbed(w, c));
        if (k == CutKind::Expansion)
          EXPECT_GT(after.expansion, before.expansion);
        else
          EXPECT_GT(after.cheeger, before.cheeger);
      }
      EXPECT_TRUE(verify_certificate(w, c));
    }
  }
}

TEST(CutCertificate, RequiresDegreePreservingPoint) {
  EXPECT_THROW(certify_cut_max(omega(make_family("cycle:5")), CutKind::Cheeger), DomainError);
}

TEST(CutCertificate, TamperedCertificateFails) {
  auto w = omega(make_family("petersen"), WeightDomain::DegreePreserving);
  auto c = certify_cut_max(w, CutKind::Expansion);
  c.cone[0] += 1;
  EXPECT_FALSE(verify_certificate(w, c));
}

TEST(Ascent, PawOptimum) {
  Graph g = fixtures::paw();
  auto r = tree_weight_ascent(g, WeightDomain::Full);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.tau.get_d(), 256.0 / 81.0, 1e-9);
  EXPECT_EQ(sum(r.final_point.weights()), 4);
  const std::vector<double> expect = {8.0 / 9, 8.0 / 9, 8.0 / 9, 4.0 / 3};
  auto x = r.final_point.weights_as_double();
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(x[j], expect[j], 1e-6);
  EXPECT_LE(r.resistance_spread, 1e-9);
}

TEST(Ascent, PawGridOracle) {
  Graph g = fixtures::paw();
  auto trees = all_trees(g);
  double best = -1;
  std::vector<double> arg;
  auto scan = [&](double lo0, double hi0, double lo1, double hi1, double lo2, double hi2, double h) {
    for (double a = lo0; a <= hi0 + 1e-12; a += h)
      for (double b = lo1; b <= hi1 + 1e-12; b += h)
        for (double c = lo2; c <= hi2 + 1e-12; c += h) {
          double d = 4 - a - b - c;
          if (a < 0 || b < 0 || c < 0 || d < 0) continue;
          double t = tau_double(trees, {a, b, c, d});
          if (t > best) {
            best = t;
            arg = {a, b, c, d};
          }
        }
  };
  scan(0, 4, 0, 4, 0, 4, 0.05);
  auto c = arg;
  scan(c[0] - 0.06, c[0] + 0.06, c[1] - 0.06, c[1] + 0.06, c[2] - 0.06, c[2] + 0.06, 1e-3);
  auto r = tree_weight_ascent(g, WeightDomain::Full);
  EXPECT_GE(r.tau.get_d(), best - 1e-12);
  EXPECT_LE(std::log(r.tau.get_d()) - std::log(best), 1e-6);
  auto x = r.final_point.weights_as_double();
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(x[j], arg[j], 1e-3);
}

TEST(Ascent, EquiarborealGraphsStayAtOmega) {
  std::mt19937 rng(13);
  for (const char* f : {"complete:4", "petersen", "hypercube:3"}) {
    Graph g = make_family(f);
    std::vector<Rational> x(g.m());
    for (auto& v : x) {
      v = Rational(1 + rng() % 5, 3);
      v.canonicalize();
    }
    Rational s = sum(x);
    for (auto& v : x) v = v * g.m() / s;
    auto r = tree_weight_ascent(g, WeightDomain::Full, WeightPoint(g, x, WeightDomain::Full));
    EXPECT_TRUE(r.converged) << f;
    double t0 = tree_number_exact(omega(g)).get_d();
    EXPECT_NEAR(r.tau.get_d() / t0, 1.0, 1e-9) << f;
    for (double v : r.final_point.weights_as_double()) EXPECT_NEAR(v, 1.0, 1e-6) << f;
  }
}

TEST(Ascent, TrajectoryIsMonotone) {
  auto r = tree_weight_ascent(fixtures::bridged_triangles(), WeightDomain::Full);
  ASSERT_GE(r.log_tau.size(), 2u);
  for (std::size_t i = 1; i < r.log_tau.size(); ++i) EXPECT_GE(r.log_tau[i], r.log_tau[i - 1] - 1e-12);
}

TEST(Ascent, DegreePreservingStaysOnPolytope) {
  for (Graph g : {fixtures::wheel5(), fixtures::bridged_triangles(), house()}) {
    auto r = tree_weight_ascent(g, WeightDomain::DegreePreserving);
    EXPECT_TRUE(r.converged);
    std::vector<Rational> deg(g.n(), Rational(0));
    for (int j = 0; j < g.m(); ++j) {
      deg[g.edge(j).u] += r.final_point.weight(j);
      deg[g.edge(j).v] += r.final_point.weight(j);
    }
    for (int v = 0; v < g.n(); ++v) EXPECT_EQ(deg[v], g.degree(v));
    // optimality: resistances lie in the span of vertex stars, r_j = p_u + p_v
    auto res = resistances_pseudoinverse(r.final_point);
    Eigen::MatrixXd nmat = Eigen::MatrixXd::Zero(g.m(), g.n());
    for (int j = 0; j < g.m(); ++j) nmat(j, g.edge(j).u) = nmat(j, g.edge(j).v) = 1;
    Eigen::VectorXd rv = Eigen::Map<Eigen::VectorXd>(res.data(), g.m());
    Eigen::VectorXd p = nmat.colPivHouseholderQr().solve(rv);
    EXPECT_LE((nmat * p - rv).norm(), 1e-8);
    EXPECT_GE(r.tau, tree_number_exact(omega(g, WeightDomain::DegreePreserving)));
  }
}

TEST(Ascent, GradientMatchesFiniteDifferences) {
  Graph g = fixtures::wheel5();
  auto trees = all_trees(g);
  std::vector<double> x = {1.2, 0.7, 1.1, 0.9, 1.3, 0.8, 1.0, 1.05, 0.95, 1.0};
  auto r = resistances_pseudoinverse(g, x);
  const double h = 1e-6;
  for (int j = 0; j < g.m(); ++j) {
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    double fd = (std::log(tau_double(trees, xp)) - std::log(tau_double(trees, xm))) / (2 * h);
    EXPECT_NEAR(r[j], fd, 1e-6);
  }
}

TEST(Ascent, LogTauIsConcaveOnSegments) {
  std::mt19937 rng(17);
  for (const Graph& g : fixtures::identity_fixtures()) {
    if (g.n() > 10) continue;
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> a(g.m()), b(g.m());
      for (int j = 0; j < g.m(); ++j) {
        a[j] = Rational(1 + rng() % 9, 1 + rng() % 4);
        b[j] = Rational(1 + rng() % 9, 1 + rng() % 4);
        a[j].canonicalize();
        b[j].canonicalize();
      }
      EXPECT_LE(log_tau_second_difference(g, a, b), 1e-12);
    }
  }
}

TEST(Ascent, RejectsBadInput) {
  Graph g = fixtures::paw();
  EXPECT_THROW(tree_weight_ascent(g, WeightDomain::Unconstrained), DomainError);
  EXPECT_THROW(tree_weight_ascent(g, WeightDomain::Full, WeightPoint(g, {2, 1, 1, 0}, WeightDomain::Full)),
               DomainError);
  EXPECT_THROW(tree_weight_ascent(disjoint_union(g, g), WeightDomain::Full), DomainError);
}

TEST(EigenCriticality, CubeSecondEigenvalue) {
  auto rep = eigen_criticality(omega(make_family("hypercube:3")), 1);
  EXPECT_NEAR(rep.mu, 2.0, 1e-9);
  EXPECT_EQ(rep.multiplicity, 3);
  EXPECT_TRUE(rep.critical);
  ASSERT_TRUE(rep.df_const);
  EXPECT_TRUE(rep.df_const->holds);
}

TEST(EigenCriticality, TriangleNeedsAdjacentPairs) {
  auto rep = eigen_criticality(omega(make_family("cycle:3")), 1);
  EXPECT_TRUE(rep.adjacent_pairs_included);
  EXPECT_EQ(rep.forms.size(), 3u);
  EXPECT_TRUE(rep.critical);
  EXPECT_EQ(rep.multiplicity, 2);
}

TEST(EigenCriticality, SquareBothEigenvalues) {
  auto w = omega(make_family("cycle:4"));
  auto two = eigen_criticality(w, 1);
  EXPECT_NEAR(two.mu, 2.0, 1e-9);
  EXPECT_EQ(two.multiplicity, 2);
  EXPECT_TRUE(two.critical);
  auto four = eigen_criticality(w, 3);
  EXPECT_NEAR(four.mu, 4.0, 1e-9);
  EXPECT_TRUE(four.critical);
  EXPECT_TRUE(four.verdicts_agree);
  EXPECT_TRUE(four.df_const->holds);
}

TEST(EigenCriticality, PathIsNotCritical) {
  auto w = omega(make_family("path:4"));
  auto rep = eigen_criticality(w, 1);
  EXPECT_FALSE(rep.critical);
  ASSERT_TRUE(rep.increasing_form);
  EXPECT_TRUE(rep.verdicts_agree);
  EXPECT_FALSE(rep.df_const->holds);
}

// First-order motion of the eigenvalue cluster under omega + t(e_a - e_b)
// equals the spectrum of the pair form.
TEST(EigenCriticality, FormPredictsEigenvalueMotion) {
  for (const char* f : {"path:5", "petersen", "moebius_ladder:8", "cycle:6"}) {
    Graph g = make_family(f);
    auto w = omega(g);
    for (int idx = 1; idx < g.n(); ++idx) {
      EigenCriticalityReport rep;
      try {
        rep = eigen_criticality(w, idx);
      } catch (const DomainError&) {
        continue;
      }
      for (std::size_t k = 0; k < rep.forms.size(); k += 7) {
        const auto& form = rep.forms[k];
        const double t = 1e-7;
        auto lap = [&](double s) {
          Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.n(), g.n());
          for (int j = 0; j < g.m(); ++j) {
            double x = 1.0 + (j == form.edge_a ? s : 0.0) - (j == form.edge_b ? s : 0.0);
            int u = g.edge(j).u, v = g.edge(j).v;
            l(u, u) += x;
            l(v, v) += x;
            l(u, v) -= x;
            l(v, u) -= x;
          }
          return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(l).eigenvalues();
        };
        auto lp = lap(t);
        for (int a = 0; a < rep.multiplicity; ++a) {
          double d = (lp[rep.first_index + a] - rep.mu) / t;
          EXPECT_NEAR(d, form.eigenvalues[a], 1e-4) << f << " mu " << rep.mu;
        }
      }
    }
  }
}

TEST(EigenCriticality, SecondCoefficientFormula) {
  for (const char* f : {"petersen", "hypercube:3", "complete:5", "heawood"}) {
    auto rep = eigen_criticality(omega(make_family(f)), 1);
    for (const auto& form : rep.forms) EXPECT_NEAR(form.c_pm2, form.c_pm2_formula, 1e-9);
  }
}

TEST(EigenCriticality, SimpleEigenvaluesAgreeWithDfConst) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    Graph g = random_connected(rng, 5 + t % 3, 0.5);
    auto w = omega(g);
    auto s = spectrum(w);
    for (const auto& c : s.clusters) {
      if (c.size() != 1 || c[0] == 0) continue;
      try {
        auto rep = eigen_criticality(w, c[0]);
        EXPECT_TRUE(rep.verdicts_agree);
        ++checked;
      } catch (const DomainError&) {
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(EigenCriticality, ZeroEigenvalueRejected) {
  EXPECT_THROW(eigen_criticality(omega(make_family("cycle:5")), 0), DomainError);
  EXPECT_THROW(eigen_criticality_value(omega(make_family("cycle:5")), 0.5), DomainError);
}

TEST(DfConst, MultipleEigenvalueSearch) {
  auto q = df_const_search(omega(make_family("hypercube:4")), 2.0);
  EXPECT_TRUE(q.searched);
  EXPECT_TRUE(q.holds);
  auto pet = df_const_search(omega(make_family("petersen")), 2.0);
  EXPECT_FALSE(pet.holds);
  auto k33 = df_const_search(omega(make_family("complete_bipartite:3,3")), 3.0);
  EXPECT_FALSE(k33.holds);
}

TEST(DfConst, Exact) {
  Graph c4 = make_family("cycle:4");
  EXPECT_TRUE(df_const_exact(c4, {1, 0, -1, 0}).holds);
  EXPECT_EQ(df_const_exact(c4, {1, 0, -1, 0}).constant, 1);
  EXPECT_FALSE(df_const_exact(c4, {1, 1, -1, -1}).holds);
}

TEST(Character, Cube) {
  Graph g = make_family("hypercube:3");
  std::vector<Rational> f(8);
  for (int v = 0; v < 8; ++v) f[v] = 3 - 2 * __builtin_popcount(v);
  auto r = character_check(g, f, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.r1, 1);
  EXPECT_EQ(r.level_sizes, (std::vector<long>{1, 3, 3, 1}));
  EXPECT_EQ(r.constant, 2);
}

TEST(Character, Square) {
  auto r = character_check(make_family("cycle:4"), {1, 0, -1, 0}, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.n0, 1);
  EXPECT_EQ(r.level_sizes, (std::vector<long>{1, 2, 1}));
}

TEST(Character, CompleteBipartiteTopEigenvalue) {
  auto r = character_check(make_family("complete_bipartite:3,3"), {1, 1, 1, -1, -1, -1}, 6);
  EXPECT_EQ(r.r1, 3);
  EXPECT_TRUE(r.passed());
}

TEST(Character, RejectsNonEigenvector) {
  EXPECT_THROW(character_check(make_family("cycle:4"), {1, 0, 0, 0}, 2), DomainError);
  EXPECT_THROW(character_check(make_family("cycle:4"), {1, 1, -1, -1}, 2), DomainError);
  EXPECT_THROW(character_check(fixtures::paw(), {1, 0, 0, 0}, 1), DomainError);
}

TEST(CubeFamily, TwoCubesJoined) {
  auto cf = cube_family(3, 2, {{{0, 1}, {8, 9}}});
  EXPECT_EQ(cf.components_before, 2);
  EXPECT_EQ(cf.components_after, 1);
  EXPECT_TRUE(cf.eigen_exact);
  EXPECT_EQ(cf.graph.n(), 16);
  EXPECT_EQ(cf.graph.regular_degree(), 3);
  std::vector<Rational> f(cf.f.begin(), cf.f.end());
  auto r = character_check(cf.graph, f, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.n0, 2);
  // independent: L f = 2 f by direct summation
  for (int u = 0; u < 16; ++u) {
    long s = 3 * cf.f[u];
    for (int v : cf.graph.neighbors(u)) s -= cf.f[v];
    EXPECT_EQ(s, 2 * cf.f[u]);
  }
}

TEST(CubeFamily, RejectsLevelBreakingSwitch) {
  EXPECT_THROW(cube_family(3, 2, {{{0, 1}, {9, 11}}}), DomainError);
  EXPECT_THROW(cube_family(0, 1, {}), DomainError);
}

TEST(Ascent, PlainGradientModeClimbs) {
  AscentOptions o;
  o.newton = false;
  o.max_iter = 500;
  auto r = tree_weight_ascent(fixtures::paw(), WeightDomain::Full, {}, o);
  EXPECT_NEAR(r.tau.get_d(), 256.0 / 81.0, 1e-6);
  EXPECT_GT(r.tau, 3);
}
