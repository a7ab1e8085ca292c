#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "extgraph/exact_linalg.hpp"
#include "extgraph/lp.hpp"

using namespace extgraph;

namespace {

// Feasible iff some choice of at most `rows` columns gives a nonnegative solution
// (Caratheodory), found by trying every column subset.
bool feasible_by_subsets(const DenseMatrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > rows) continue;
    std::vector<std::size_t> pick;
    for (std::size_t j = 0; j < cols; ++j)
      if (mask >> j & 1u) pick.push_back(j);
    DenseMatrix<Rational> sub(rows, pick.size());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < pick.size(); ++k) sub(i, k) = a(i, pick[k]);
    auto x = solve_any(sub, b);
    if (!x) continue;
    // the solution is unique only when the columns are independent
    bool nonneg = true;
    for (const auto& v : *x) nonneg = nonneg && v >= 0;
    if (nonneg) return true;
  }
  return false;
}

}  // namespace

TEST(Lp, SimpleFeasible) {
  DenseMatrix<Rational> a(2, 3);
  a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 0;
  a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 1;
  auto r = solve_feasibility(a, {Rational(2), Rational(3)});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.x[0] + r.x[1], 2);
  EXPECT_EQ(r.x[1] + r.x[2], 3);
}

TEST(Lp, SimpleInfeasible) {
  // x1 + x2 = -1 has no nonnegative solution
  DenseMatrix<Rational> a(1, 2, Rational(1));
  auto r = solve_feasibility(a, {Rational(-1)});
  ASSERT_FALSE(r.feasible);
  EXPECT_GT(r.farkas[0], 0);
}

TEST(Lp, DegenerateRows) {
  DenseMatrix<Rational> a(3, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  a(1, 0) = 2; a(1, 1) = 2;
  a(2, 0) = 1; a(2, 1) = -1;
  auto r = solve_feasibility(a, {Rational(2), Rational(4), Rational(0)});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.x[0], 1);
  EXPECT_EQ(r.x[1], 1);
}

TEST(Lp, RandomAgainstSubsetOracle) {
  std::mt19937 rng(17);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 6;
    DenseMatrix<Rational> a(rows, cols);
    std::vector<Rational> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<int>(rng() % 7) - 3;
      b[i] = static_cast<int>(rng() % 7) - 3;
    }
    auto r = solve_feasibility(a, b);
    EXPECT_EQ(r.feasible, feasible_by_subsets(a, b)) << "trial " << trial;
    (r.feasible ? feasible : infeasible)++;
  }
  EXPECT_GT(feasible, 30);
  EXPECT_GT(infeasible, 30);
}
