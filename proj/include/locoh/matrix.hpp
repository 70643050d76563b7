#pragma once

#include <cstddef>
#include <vector>

#include "locoh/errors.hpp"

namespace locoh {

// Dense row-major matrix.  Shapes here are tiny (boundary and coboundary
// matrices of complexes on at most 16 vertices), so nothing clever is needed.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> d_;
};

using IntMatrix = Matrix<int>;

inline IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols() != B.rows()) throw DimensionMismatch("matrix product shape");
  IntMatrix C(A.rows(), B.cols(), 0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      int a = A(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  return C;
}

inline bool is_zero_matrix(const IntMatrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

}  // namespace locoh
