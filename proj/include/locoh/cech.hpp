#pragma once

// The module-theoretic route to the graded pieces of local cohomology: for a
// fixed multidegree a, the degree-a slice of the Cech complex on x_1..x_n has
// a basis indexed by the admitted variable subsets, one basis vector per
// subset since every localized summand is at most one-dimensional per degree.
// Cohomology of this slice is computed directly from coboundary ranks and is
// the independent cross-check for the combinatorial (degree-complex) route.

#include <map>
#include <vector>

#include "locoh/linalg.hpp"
#include "locoh/multidegree.hpp"

namespace locoh {

// Admitted subsets of size t, ascending by mask value.
inline std::vector<Mask> cech_degree_basis(const MonomialIdeal& I,
                                           const MultiDegree& a, int t) {
  const int n = I.nvars();
  if (t < 0 || t > n) throw PreconditionViolation("cochain degree out of range");
  const Mask g = a.g_mask();
  if (card(g) > t) return {};
  std::vector<Mask> out;
  for (Mask f : masks_of_size(n, t))
    if ((f & g) == g && admits(I, a.a, f)) out.push_back(f);
  return out;
}

// The degree-a slice of the Cech complex: bases for t = 0..n and the
// coboundary matrices d_t : C^t -> C^{t+1}.  d(b_F) = sum (-1)^s b_{F'} over
// admitted F' = F + {j}, where s is the position of j within F' ascending.
struct CechDegreeComplex {
  std::vector<std::vector<Mask>> bases;  // index t = 0..n
  std::vector<IntMatrix> diff;           // index t = 0..n-1, shape |B_{t+1}| x |B_t|
};

inline IntMatrix cech_coboundary(const std::vector<Mask>& from,
                                 const std::vector<Mask>& to) {
  IntMatrix M(to.size(), from.size(), 0);
  for (std::size_t c = 0; c < from.size(); ++c) {
    const Mask f = from[c];
    for (std::size_t r = 0; r < to.size(); ++r) {
      const Mask fp = to[r];
      if ((fp & f) != f) continue;
      const Mask extra = fp & ~f;
      if (card(extra) != 1) continue;
      const int j = mask_bits(extra)[0];
      M(r, c) = (rank_in(fp, j) % 2 == 0) ? 1 : -1;
    }
  }
  return M;
}

inline CechDegreeComplex build_cech_complex(const MonomialIdeal& I,
                                            const MultiDegree& a) {
  const int n = I.nvars();
  CechDegreeComplex out;
  out.bases.resize(n + 1);
  for (int t = 0; t <= n; ++t) out.bases[t] = cech_degree_basis(I, a, t);
  out.diff.resize(n);
  for (int t = 0; t < n; ++t)
    out.diff[t] = cech_coboundary(out.bases[t], out.bases[t + 1]);
  return out;
}

// d_{t+1} d_t = 0; cheap enough to verify outright when asked.
inline bool cech_differentials_compose_to_zero(const CechDegreeComplex& C) {
  for (std::size_t t = 0; t + 1 < C.diff.size(); ++t)
    if (!is_zero_matrix(multiply(C.diff[t + 1], C.diff[t]))) return false;
  return true;
}

// dim_K H^i of the degree-a slice for i = 0..n.
inline std::vector<long> cech_cohomology_dims(const MonomialIdeal& I,
                                              const MultiDegree& a,
                                              const FieldSpec& K) {
  const int n = I.nvars();
  const CechDegreeComplex C = build_cech_complex(I, a);
  std::vector<long> rank_d(n, 0);
  for (int t = 0; t < n; ++t) rank_d[t] = exact_rank(C.diff[t], K);
  std::vector<long> dims(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    const long r_out = i < n ? rank_d[i] : 0;
    const long r_in = i > 0 ? rank_d[i - 1] : 0;
    dims[i] = static_cast<long>(C.bases[i].size()) - r_out - r_in;
  }
  return dims;
}

// Chain map of multiplication by x_j from slice a to slice a + e_j, one 0/1
// matrix per cochain degree: a basis vector survives with coefficient exactly
// 1 when its subset stays admitted, and dies otherwise.  Admissibility only
// shrinks as the degree grows, so these matrices are partial identities.
inline std::vector<IntMatrix> multiplication_map(const MonomialIdeal& I,
                                                 const MultiDegree& a, int j) {
  const int n = I.nvars();
  if (j < 0 || j >= n) throw PreconditionViolation("variable index out of range");
  MultiDegree b = a;
  b.a[j] += 1;
  std::vector<IntMatrix> out;
  out.reserve(n + 1);
  for (int t = 0; t <= n; ++t) {
    const auto src = cech_degree_basis(I, a, t);
    const auto dst = cech_degree_basis(I, b, t);
    IntMatrix M(dst.size(), src.size(), 0);
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto it = std::lower_bound(dst.begin(), dst.end(), src[c]);
      if (it != dst.end() && *it == src[c])
        M(static_cast<std::size_t>(it - dst.begin()), c) = 1;
    }
    out.push_back(std::move(M));
  }
  return out;
}

// The square d_t(a+e_j) T_t = T_{t+1} d_t(a) for all t; property suite fodder.
inline bool multiplication_commutes(const MonomialIdeal& I, const MultiDegree& a,
                                    int j) {
  MultiDegree b = a;
  b.a[j] += 1;
  const CechDegreeComplex Ca = build_cech_complex(I, a);
  const CechDegreeComplex Cb = build_cech_complex(I, b);
  const auto T = multiplication_map(I, a, j);
  for (int t = 0; t < I.nvars(); ++t)
    if (multiply(Cb.diff[t], T[t]) != multiply(T[t + 1], Ca.diff[t])) return false;
  return true;
}

// ---- induced maps on cohomology ----

// Presentation of H^i at one degree: a choice of cocycle representatives
// extending a column basis of the coboundary image, plus the matrix [B | S]
// against which arbitrary cocycles are expressed.
template <class Ops>
struct CohomologyPresentation {
  std::vector<Mask> basis;  // B_i at this degree
  long h = 0;               // dim H^i
  FMat<Ops> reps;           // |B_i| x h
  FMat<Ops> express;        // |B_i| x (rank_im + h), full column rank
  long rank_im = 0;

  // Coordinates of cocycle z modulo coboundaries, in terms of the reps.
  std::vector<typename Ops::Elem> coords(const Ops& ops,
                                         const std::vector<typename Ops::Elem>& z) const {
    if (h == 0) return {};
    const auto x = solve_full_rank(ops, express, z);
    return {x.end() - h, x.end()};
  }
};

template <class Ops>
CohomologyPresentation<Ops> build_presentation(const Ops& ops, const MonomialIdeal& I,
                                               const MultiDegree& a, int i) {
  const int n = I.nvars();
  CohomologyPresentation<Ops> P;
  P.basis = cech_degree_basis(I, a, i);
  const std::size_t dim = P.basis.size();
  const auto below = i > 0 ? cech_degree_basis(I, a, i - 1) : std::vector<Mask>{};
  const auto above = i < n ? cech_degree_basis(I, a, i + 1) : std::vector<Mask>{};
  const auto d_in = from_int_matrix(ops, cech_coboundary(below, P.basis));
  const auto d_out = from_int_matrix(ops, cech_coboundary(P.basis, above));
  const auto kern = kernel_basis(ops, d_out);

  SpanTracker<Ops> span(ops, dim);
  std::vector<std::size_t> im_cols, rep_cols;
  auto column = [dim, &ops](const FMat<Ops>& M, std::size_t c) {
    std::vector<typename Ops::Elem> v(dim, ops.zero());
    for (std::size_t r = 0; r < dim; ++r) v[r] = M(r, c);
    return v;
  };
  for (std::size_t c = 0; c < d_in.cols(); ++c)
    if (span.add(column(d_in, c))) im_cols.push_back(c);
  P.rank_im = static_cast<long>(im_cols.size());
  for (std::size_t c = 0; c < kern.cols(); ++c)
    if (span.add(column(kern, c))) rep_cols.push_back(c);
  P.h = static_cast<long>(rep_cols.size());

  P.reps = FMat<Ops>(dim, P.h, ops.zero());
  for (std::size_t c = 0; c < rep_cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) P.reps(r, c) = kern(r, rep_cols[c]);
  P.express = FMat<Ops>(dim, im_cols.size() + rep_cols.size(), ops.zero());
  for (std::size_t c = 0; c < im_cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) P.express(r, c) = d_in(r, im_cols[c]);
  for (std::size_t c = 0; c < rep_cols.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      P.express(r, im_cols.size() + c) = P.reps(r, c);
  return P;
}

// Matrix of H^i(mult by x_j) between two adjacent degrees in the chosen
// bases.  The chain map is the partial identity on subsets, so pushing a
// representative forward is a basis-aligned copy followed by a class lookup.
template <class Ops>
FMat<Ops> induced_step(const Ops& ops, const CohomologyPresentation<Ops>& src,
                       const CohomologyPresentation<Ops>& dst) {
  FMat<Ops> out(dst.h, src.h, ops.zero());
  if (src.h == 0 || dst.h == 0) return out;
  for (long c = 0; c < src.h; ++c) {
    std::vector<typename Ops::Elem> v(dst.basis.size(), ops.zero());
    for (std::size_t r = 0; r < src.basis.size(); ++r) {
      if (ops.is_zero(src.reps(r, c))) continue;
      const auto it = std::lower_bound(dst.basis.begin(), dst.basis.end(), src.basis[r]);
      if (it != dst.basis.end() && *it == src.basis[r])
        v[static_cast<std::size_t>(it - dst.basis.begin())] = src.reps(r, c);
    }
    const auto cc = dst.coords(ops, v);
    for (long r = 0; r < dst.h; ++r) out(r, c) = cc[r];
  }
  return out;
}

}  // namespace locoh
