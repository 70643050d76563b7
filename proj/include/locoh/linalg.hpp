#pragma once

// Exact rank and kernel computations.  Over Q, integer input matrices go
// through fraction-free (Bareiss) elimination so every intermediate value is
// an integer minor of the input; over GF(p), plain modular elimination.
// No floating point anywhere.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "locoh/field.hpp"
#include "locoh/matrix.hpp"

namespace locoh {

// Fraction-free elimination with full pivoting.  Divisions are exact by the
// Bareiss identity: after step k every entry is a (k+1)x(k+1) minor of the
// original matrix, and the previous pivot divides the cross product.
inline long bareiss_rank(Matrix<mpz_class> M) {
  const std::size_t m = M.rows(), n = M.cols();
  mpz_class prev = 1;
  std::size_t k = 0;
  for (; k < m && k < n; ++k) {
    std::size_t pr = k, pc = k;
    bool found = false;
    for (std::size_t i = k; i < m && !found; ++i)
      for (std::size_t j = k; j < n && !found; ++j)
        if (sgn(M(i, j)) != 0) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    if (pr != k)
      for (std::size_t j = 0; j < n; ++j) swap(M(k, j), M(pr, j));
    if (pc != k)
      for (std::size_t i = 0; i < m; ++i) swap(M(i, k), M(i, pc));
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return static_cast<long>(k);
}

inline long rank_mod_p(Matrix<std::uint64_t> M, std::uint64_t p) {
  const PrimeOps ops(p);
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && M(piv, col) % p == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(M(rank, j), M(piv, j));
    const std::uint64_t inv = ops.inverse(M(rank, col) % p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const std::uint64_t f = ops.mul(M(i, col) % p, inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        M(i, j) = ops.sub(M(i, j) % p, ops.mul(f, M(rank, j) % p));
    }
    ++rank;
  }
  return static_cast<long>(rank);
}

inline long exact_rank(const IntMatrix& M, const FieldSpec& K) {
  if (M.empty()) return 0;
  if (K.kind == FieldSpec::Kind::rationals) {
    Matrix<mpz_class> Z(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) Z(i, j) = M(i, j);
    return bareiss_rank(std::move(Z));
  }
  const PrimeOps ops(K.p);
  Matrix<std::uint64_t> P(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) P(i, j) = ops.from_int(M(i, j));
  return rank_mod_p(std::move(P), K.p);
}

// ---- field-generic dense routines (used by the induced-map machinery) ----

template <class Ops>
using FMat = Matrix<typename Ops::Elem>;

template <class Ops>
FMat<Ops> from_int_matrix(const Ops& ops, const IntMatrix& M) {
  FMat<Ops> F(M.rows(), M.cols(), ops.zero());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) F(i, j) = ops.from_int(M(i, j));
  return F;
}

template <class Ops>
FMat<Ops> fmul(const Ops& ops, const FMat<Ops>& A, const FMat<Ops>& B) {
  if (A.cols() != B.rows()) throw DimensionMismatch("matrix product shape");
  FMat<Ops> C(A.rows(), B.cols(), ops.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (ops.is_zero(A(i, k))) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        C(i, j) = ops.add(C(i, j), ops.mul(A(i, k), B(k, j)));
    }
  return C;
}

template <class Ops>
bool fis_zero(const Ops& ops, const FMat<Ops>& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!ops.is_zero(A(i, j))) return false;
  return true;
}

// Row-reduces M in place; returns the pivot column of each echelon row.
template <class Ops>
std::vector<std::size_t> row_reduce(const Ops& ops, FMat<Ops>& M) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
    std::size_t piv = row;
    while (piv < M.rows() && ops.is_zero(M(piv, col))) ++piv;
    if (piv == M.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(row, j), M(piv, j));
    const auto inv = ops.div(ops.one(), M(row, col));
    for (std::size_t j = col; j < M.cols(); ++j) M(row, j) = ops.mul(M(row, j), inv);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == row || ops.is_zero(M(i, col))) continue;
      const auto f = M(i, col);
      for (std::size_t j = col; j < M.cols(); ++j)
        M(i, j) = ops.sub(M(i, j), ops.mul(f, M(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of ker(M) as columns.  Standard free-column construction from the
// reduced row echelon form.
template <class Ops>
FMat<Ops> kernel_basis(const Ops& ops, FMat<Ops> M) {
  const std::size_t n = M.cols();
  if (n == 0) return FMat<Ops>(0, 0);
  const auto pivots = row_reduce(ops, M);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  const std::size_t nullity = n - pivots.size();
  FMat<Ops> K(n, nullity, ops.zero());
  std::size_t kcol = 0;
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    K(freec, kcol) = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      K(pivots[r], kcol) = ops.neg(M(r, freec));
    ++kcol;
  }
  return K;
}

// Solves A x = b for A with full column rank; the systems solved here are
// consistent by construction, so failure to back-substitute is reported as a
// precondition violation.
template <class Ops>
std::vector<typename Ops::Elem> solve_full_rank(const Ops& ops, FMat<Ops> A,
                                                std::vector<typename Ops::Elem> b) {
  const std::size_t m = A.rows(), n = A.cols();
  if (b.size() != m) throw DimensionMismatch("rhs size");
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = row;
    while (piv < m && ops.is_zero(A(piv, col))) ++piv;
    if (piv == m) throw PreconditionViolation("solve: matrix not of full column rank");
    if (piv != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(row, j), A(piv, j));
      std::swap(b[row], b[piv]);
    }
    const auto inv = ops.div(ops.one(), A(row, col));
    for (std::size_t j = col; j < n; ++j) A(row, j) = ops.mul(A(row, j), inv);
    b[row] = ops.mul(b[row], inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || ops.is_zero(A(i, col))) continue;
      const auto f = A(i, col);
      for (std::size_t j = col; j < n; ++j) A(i, j) = ops.sub(A(i, j), ops.mul(f, A(row, j)));
      b[i] = ops.sub(b[i], ops.mul(f, b[row]));
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!ops.is_zero(b[i])) throw PreconditionViolation("solve: inconsistent system");
  std::vector<typename Ops::Elem> x(n, ops.zero());
  for (std::size_t col = 0; col < n; ++col) x[col] = b[pivot_of_col[col]];
  return x;
}

// Incremental column-space tracker: add() reduces against the rows collected
// so far and reports whether the vector enlarged the span.
template <class Ops>
class SpanTracker {
 public:
  explicit SpanTracker(const Ops& ops, std::size_t dim) : ops_(ops), dim_(dim) {}

  bool add(std::vector<typename Ops::Elem> v) {
    if (v.size() != dim_) throw DimensionMismatch("span tracker vector size");
    for (const auto& [lead, row] : rows_) {
      if (ops_.is_zero(v[lead])) continue;
      const auto f = v[lead];
      for (std::size_t j = 0; j < dim_; ++j) v[j] = ops_.sub(v[j], ops_.mul(f, row[j]));
    }
    std::size_t lead = 0;
    while (lead < dim_ && ops_.is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    const auto inv = ops_.div(ops_.one(), v[lead]);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = ops_.mul(v[j], inv);
    rows_.emplace_back(lead, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  Ops ops_;
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<typename Ops::Elem>>> rows_;
};

}  // namespace locoh
