#pragma once

// Combinatorial finite-length criteria.  Everything here works with the
// exceedance sets L(a,u) = { i : nu_i(u) > a_i } and the sigma-saturation
// a(sigma) that lifts the coordinates of sigma to rho.  The necessary
// condition below is exact (iff) in dimensions 2 and 3.

#include <optional>
#include <vector>

#include "locoh/simplicial.hpp"

namespace locoh {

inline Mask L_set(const std::vector<int>& a, const Monomial& u) {
  if (static_cast<int>(a.size()) != u.nvars())
    throw LengthMismatch("degree arity differs from monomial");
  Mask m = 0;
  for (int i = 0; i < u.nvars(); ++i)
    if (u.exponent(i) > a[i]) m |= bit(i);
  return m;
}

inline std::vector<int> sigma_extend(const std::vector<int>& a, Mask sigma,
                                     const std::vector<int>& rho) {
  if (a.size() != rho.size()) throw LengthMismatch("degree and rho arity differ");
  std::vector<int> out = a;
  for (int i : mask_bits(sigma)) out[i] = rho[i];
  return out;
}

struct AdmissibleDegree {
  Mask sigma = 0;
  std::vector<int> a;  // 0 <= a <= rho-1, normalized to rho_j - 1 on sigma
  bool maximal = false;

  bool operator==(const AdmissibleDegree&) const = default;
};

namespace detail {

// Condition (b): every mixed generator still has an exceedance outside sigma.
inline bool admissible_b(const std::vector<Monomial>& mixed, const std::vector<int>& a,
                         Mask sigma, const std::vector<int>& rho) {
  for (const auto& u : mixed)
    if (L_set(sigma_extend(a, sigma, rho), u) == 0) return false;
  return true;
}

}  // namespace detail

// All box points maximal for condition (b) at this face, normalized on sigma.
// The admissible set is closed downward, so maximality is just "no single
// coordinate outside sigma can step up".
inline std::vector<AdmissibleDegree> maximal_admissible_degrees(const MonomialIdeal& I,
                                                                Mask sigma) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  if (!D.contains(sigma)) throw NotAFace("sigma is not a face of the radical complex");
  const std::vector<int> rho = I.rho();
  const std::vector<Monomial> mixed = split_generators(I).mixed;
  const int n = I.nvars();

  std::vector<AdmissibleDegree> out;
  std::vector<int> a(n);
  for (int j = 0; j < n; ++j) a[j] = has_bit(sigma, j) ? rho[j] - 1 : 0;
  while (true) {
    if (detail::admissible_b(mixed, a, sigma, rho)) {
      bool maximal = true;
      for (int j = 0; j < n && maximal; ++j) {
        if (has_bit(sigma, j) || a[j] + 1 > rho[j] - 1) continue;
        std::vector<int> up = a;
        ++up[j];
        maximal = !detail::admissible_b(mixed, up, sigma, rho);
      }
      if (maximal) out.push_back(AdmissibleDegree{sigma, a, true});
    }
    int j = n - 1;
    while (j >= 0 && (has_bit(sigma, j) || a[j] == rho[j] - 1)) --j;
    if (j < 0) break;
    ++a[j];
    for (int k = j + 1; k < n; ++k)
      if (!has_bit(sigma, k)) a[k] = 0;
  }
  return out;
}

// The escape-variable test at one (sigma, a): some ell in [m] - sigma sits at
// the box ceiling and keeps every generator that tops out at ell satisfiable
// after saturating ell as well.
inline bool escape_variable_exists(const MonomialIdeal& I, Mask sigma,
                                   const std::vector<int>& a) {
  const std::vector<int> rho = I.rho();
  const GeneratorSplit split = split_generators(I);
  for (int ell : mask_bits(split.m_mask & ~sigma)) {
    if (a[ell] != rho[ell] - 1) continue;
    bool ok = true;
    const std::vector<int> ext = sigma_extend(a, sigma | bit(ell), rho);
    for (const auto& u : split.mixed) {
      if (u.exponent(ell) != rho[ell]) continue;
      if (L_set(ext, u) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

struct NecessityResult {
  bool holds = true;
  // Witness of failure: the face and maximal admissible point with no escape.
  std::optional<AdmissibleDegree> witness;
};

// Necessary condition for H^i to have finite length, checked over every
// (i-1)-face and every maximal admissible degree there.
inline NecessityResult check_necessary_condition(const MonomialIdeal& I, int i) {
  if (i < 1) throw PreconditionViolation("cohomological index must be >= 1");
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  for (Mask sigma : D.faces_of_dim(i - 1))
    for (const auto& ad : maximal_admissible_degrees(I, sigma))
      if (!escape_variable_exists(I, sigma, ad.a))
        return NecessityResult{false, ad};
  return NecessityResult{true, std::nullopt};
}

// Exact criterion in Krull dimension 2: generalized CM iff the necessary
// condition holds on vertices.
inline bool check_dim2(const MonomialIdeal& I) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  if (D.dimension() != 1)
    throw DimensionMismatch("dim-2 criterion needs a 1-dimensional complex");
  return check_necessary_condition(I, 1).holds;
}

// Vertex set of the degree complex at a degree with G_a = {j}, computed from
// the L-sets alone.  Asserted elsewhere to match degree_complex directly.
inline Mask vertex_set_delta_a(const MonomialIdeal& I, const MultiDegree& a) {
  const Mask g = a.g_mask();
  if (card(g) != 1) throw PreconditionViolation("exactly one negative coordinate required");
  const int j = mask_bits(g)[0];
  const GeneratorSplit split = split_generators(I);
  if (!has_bit(split.m_mask, j))
    throw PreconditionViolation("the negative variable generates a pure power");
  const std::vector<int> rho = I.rho();
  for (int k = 0; k < I.nvars(); ++k)
    if (k != j && a.a[k] > rho[k] - 1)
      throw PreconditionViolation("degree exceeds the bounding box");
  if (!admits(I, a.a, g)) throw PreconditionViolation("void degree complex");

  Mask out = 0;
  for (int ell : mask_bits(split.m_mask & ~g)) {
    bool in = true;
    const std::vector<int> ext = sigma_extend(a.a, g | bit(ell), rho);
    for (const auto& u : split.mixed)
      if (L_set(ext, u) == 0) {
        in = false;
        break;
      }
    if (in) out |= bit(ell);
  }
  return out;
}

namespace detail {

// Clause (2) at one (j, a): on the vertices of Delta_a, call {x,y} bad when
// some mixed generator exceeds exactly at {x,y} once j is saturated.  A
// bipartition with all cross pairs bad exists iff the good-pair graph is
// disconnected; connectivity (or a vertex count <= 1) rules it out.
inline bool no_disconnecting_bipartition(const MonomialIdeal& I, int j,
                                         const std::vector<int>& a) {
  const std::vector<int> rho = I.rho();
  const GeneratorSplit split = split_generators(I);
  const std::vector<int> aj = sigma_extend(a, bit(j), rho);

  Mask La = 0;
  for (const auto& u : split.mixed) {
    const Mask L = L_set(aj, u);
    if (card(L) == 1) La |= L;
  }
  const std::vector<int> verts = mask_bits(split.m_mask & ~bit(j) & ~La);
  const int nv = static_cast<int>(verts.size());
  if (nv <= 1) return true;

  std::vector<int> parent(nv);
  for (int v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < nv; ++x)
    for (int y = x + 1; y < nv; ++y) {
      bool bad = false;
      for (const auto& u : split.mixed)
        if (L_set(aj, u) == (bit(verts[x]) | bit(verts[y]))) {
          bad = true;
          break;
        }
      if (!bad) parent[find(x)] = find(y);
    }
  int comps = 0;
  for (int v = 0; v < nv; ++v)
    if (find(v) == v) ++comps;
  return comps == 1;
}

}  // namespace detail

// Exact criterion in Krull dimension 3: the vertex condition with escape
// variables, no disconnecting bipartition at any vertex, and the necessary
// condition on edges.
inline bool check_dim3(const MonomialIdeal& I) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  if (D.dimension() != 2)
    throw DimensionMismatch("dim-3 criterion needs a 2-dimensional complex");
  for (Mask sigma : D.faces_of_dim(0)) {
    const int j = mask_bits(sigma)[0];
    for (const auto& ad : maximal_admissible_degrees(I, sigma)) {
      if (!escape_variable_exists(I, sigma, ad.a)) return false;
      if (!detail::no_disconnecting_bipartition(I, j, ad.a)) return false;
    }
  }
  return check_necessary_condition(I, 2).holds;
}

inline bool purity_check(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw NotSquareFree("purity filter expects a square-free ideal");
  return stanley_reisner_complex(I).is_pure();
}

}  // namespace locoh
