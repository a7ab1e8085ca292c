#include "extgraph/exact_linalg.hpp"

#include <stdexcept>

namespace extgraph {

BigInt bareiss_determinant(DenseMatrix<BigInt> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij = (a_kk a_ij - a_ik a_kj) / prev, exact
        t = a(k, k) * a(i, j);
        t -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign > 0 ? det : BigInt(-det);
}

Rational determinant(const DenseMatrix<Rational>& a) {
  const std::size_t n = a.rows();
  DenseMatrix<BigInt> ints(n, a.cols());
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rational v = a(r, c) * l;
      ints(r, c) = v.get_num();
    }
    scale *= l;
  }
  Rational det(bareiss_determinant(std::move(ints)), scale);
  det.canonicalize();
  return det;
}

std::optional<std::vector<Rational>> solve_any(DenseMatrix<Rational> a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    std::swap(b[r], b[p]);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace extgraph
