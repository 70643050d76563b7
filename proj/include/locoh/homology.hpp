#pragma once

#include <map>

#include "locoh/linalg.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

// Boundary map del_i : C_i -> C_{i-1} of the reduced chain complex, with faces
// of each dimension ordered by ascending mask value.  For F = {j_0 < ... < j_i},
// del F = sum_s (-1)^s (F minus j_s); in particular every vertex maps to the
// empty face with coefficient +1.
inline IntMatrix boundary_matrix(const SimplicialComplex& D, int i) {
  const auto rows = D.faces_of_dim(i - 1);
  const auto cols = D.faces_of_dim(i);
  IntMatrix M(rows.size(), cols.size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Mask f = cols[c];
    for (int v : mask_bits(f)) {
      const Mask sub = f & ~bit(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      // Downward closure guarantees the subface is present.
      const std::size_t r = static_cast<std::size_t>(it - rows.begin());
      M(r, c) = (rank_in(f, v) % 2 == 0) ? 1 : -1;
    }
  }
  return M;
}

// Reduced simplicial homology dimensions over K.  Conventions: the void
// complex has no homology at all; the irrelevant complex {{}} has a single
// one-dimensional piece in degree -1.
struct HomologyResult {
  int dim_delta = -1;
  std::map<int, long> dims;  // degree -> dim, for -1 <= degree <= dim_delta

  long at(int i) const {
    const auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }

  bool all_zero() const {
    for (const auto& [i, d] : dims)
      if (d != 0) return false;
    return true;
  }

  bool operator==(const HomologyResult&) const = default;
};

inline HomologyResult reduced_homology(const SimplicialComplex& D, const FieldSpec& K) {
  HomologyResult out;
  out.dim_delta = D.dimension();
  if (D.is_void()) return out;
  std::map<int, long> rank_del;  // i -> rank of del_i
  std::map<int, long> count;     // i -> number of i-faces
  count[-1] = 1;
  for (int i = 0; i <= out.dim_delta; ++i)
    count[i] = static_cast<long>(D.faces_of_dim(i).size());
  for (int i = 0; i <= out.dim_delta; ++i) rank_del[i] = exact_rank(boundary_matrix(D, i), K);
  for (int i = -1; i <= out.dim_delta; ++i) {
    const long r_in = i + 1 <= out.dim_delta ? rank_del[i + 1] : 0;
    const long r_out = i >= 0 ? rank_del[i] : 0;
    out.dims[i] = count[i] - r_out - r_in;
  }
  return out;
}

// Same dimensions computed from the transposed (coboundary) maps.  Over a
// field the two agree; radical-compare and the property suite lean on this.
inline HomologyResult reduced_cohomology(const SimplicialComplex& D, const FieldSpec& K) {
  HomologyResult out;
  out.dim_delta = D.dimension();
  if (D.is_void()) return out;
  std::map<int, long> rank_delta;  // i -> rank of the coboundary C^i -> C^{i+1}
  std::map<int, long> count;
  count[-1] = 1;
  for (int i = 0; i <= out.dim_delta; ++i)
    count[i] = static_cast<long>(D.faces_of_dim(i).size());
  for (int i = -1; i <= out.dim_delta; ++i)
    rank_delta[i] = i + 1 <= out.dim_delta
                        ? exact_rank(boundary_matrix(D, i + 1).transposed(), K)
                        : 0;
  for (int i = -1; i <= out.dim_delta; ++i) {
    const long r_out = rank_delta[i];
    const long r_in = i >= 0 ? rank_delta[i - 1] : 0;
    out.dims[i] = count[i] - r_out - r_in;
  }
  return out;
}

inline bool cohomology_matches_homology(const SimplicialComplex& D, const FieldSpec& K) {
  return reduced_homology(D, K) == reduced_cohomology(D, K);
}

// Reduced Euler characteristic from face counts; equals the alternating sum
// of homology dimensions whatever the field.
inline long reduced_euler_characteristic(const SimplicialComplex& D) {
  long chi = 0;
  for (Mask f : D.faces()) chi += (card(f) % 2 == 0) ? -1 : 1;
  // faces of even cardinality have odd dimension; the empty face contributes -1
  return chi;
}

}  // namespace locoh
