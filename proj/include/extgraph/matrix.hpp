#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace extgraph {

// Row-major dense matrix; used for the exact (BigInt/Rational) linear algebra.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  // Copy with row `skip_row` and column `skip_col` deleted.
  DenseMatrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    DenseMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace extgraph
