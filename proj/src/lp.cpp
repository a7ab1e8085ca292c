#include "extgraph/lp.hpp"

#include <stdexcept>

namespace extgraph {

LpResult solve_feasibility(const DenseMatrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("solve_feasibility: size mismatch");
  const std::size_t width = cols + rows;  // original columns, then one artificial per row

  std::vector<int> sign(rows, 1);
  DenseMatrix<Rational> t(rows, width);
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = sign[i] * a(i, j);
    t(i, cols + i) = 1;
    rhs[i] = sign[i] * b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // reduced costs of  min sum(artificials)
  std::vector<Rational> reduced(width, Rational(0));
  Rational objective = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= t(i, j);
    objective += rhs[i];
  }

  LpResult out;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = rhs[i] / t(i, enter);
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // the phase-I objective is bounded below by 0
    if (leave == rows) throw std::logic_error("solve_feasibility: unbounded phase I");

    Rational piv = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
      rhs[i] -= f * rhs[leave];
    }
    Rational f = reduced[enter];
    for (std::size_t j = 0; j < width; ++j)
      if (t(leave, j) != 0) reduced[j] -= f * t(leave, j);
    objective += f * rhs[leave];
    basis[leave] = enter;
    ++out.pivots;
  }

  if (objective == 0) {
    out.feasible = true;
    out.x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols) out.x[basis[i]] = rhs[i];
    for (std::size_t i = 0; i < rows; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * out.x[j];
      if (s != b[i]) throw std::logic_error("solve_feasibility: primal check failed");
    }
    return out;
  }

  // Dual multipliers y_k = 1 - reduced_k on the artificial columns satisfy
  // y^T (SA) <= 0 and y^T (Sb) = objective > 0; flip to the original rows.
  out.farkas.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) out.farkas[i] = -sign[i] * (1 - reduced[cols + i]);
  Rational zb = 0;
  for (std::size_t i = 0; i < rows; ++i) zb += out.farkas[i] * b[i];
  if (zb >= 0) throw std::logic_error("solve_feasibility: Farkas check failed");
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += out.farkas[i] * a(i, j);
    if (s < 0) throw std::logic_error("solve_feasibility: Farkas check failed");
  }
  return out;
}

}  // namespace extgraph
