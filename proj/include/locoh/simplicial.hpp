#pragma once

#include <algorithm>
#include <vector>

#include "locoh/bits.hpp"
#include "locoh/errors.hpp"
#include "locoh/ideal.hpp"
#include "locoh/multidegree.hpp"

namespace locoh {

// An abstract simplicial complex on ground set {0,...,n-1}, stored as the
// sorted list of its faces (bitmasks).  Two degenerate complexes matter and
// are kept distinct: the void complex (no faces at all) and the irrelevant
// complex {{}} whose only face is empty.  Both have dimension -1.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }

  static SimplicialComplex irrelevant_complex(int n) {
    return SimplicialComplex(n, {Mask{0}});
  }

  // From an explicit face list; verifies downward closure.
  static SimplicialComplex from_faces(int n, std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex d(n, std::move(faces));
    for (Mask f : d.faces_)
      for (int v : mask_bits(f))
        if (!d.contains(f & ~bit(v)))
          throw PreconditionViolation("face list is not downward closed");
    return d;
  }

  // Downward closure of the given faces.  An empty list yields the void complex.
  static SimplicialComplex from_facets(int n, const std::vector<Mask>& facets) {
    std::vector<Mask> faces;
    for (Mask f : facets) {
      auto subs = submasks(f);
      faces.insert(faces.end(), subs.begin(), subs.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return SimplicialComplex(n, std::move(faces));
  }

  int ground() const { return n_; }
  const std::vector<Mask>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool is_irrelevant() const { return faces_.size() == 1 && faces_[0] == 0; }

  bool contains(Mask f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
  }

  // Max face dimension; -1 both for the void and the irrelevant complex.
  int dimension() const {
    int d = -1;
    for (Mask f : faces_) d = std::max(d, card(f) - 1);
    return d;
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (contains(bit(v))) out.push_back(v);
    return out;
  }

  std::vector<Mask> faces_of_dim(int k) const {
    std::vector<Mask> out;
    for (Mask f : faces_)
      if (card(f) == k + 1) out.push_back(f);
    return out;
  }

  // Faces not properly contained in another face.
  std::vector<Mask> facets() const {
    std::vector<Mask> out;
    for (Mask f : faces_) {
      bool maximal = true;
      for (Mask g : faces_)
        if (g != f && (g & f) == f) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  // All facets of equal dimension.  Vacuously true for the void complex.
  bool is_pure() const {
    auto fs = facets();
    if (fs.empty()) return true;
    for (const Mask f : fs)
      if (card(f) != card(fs.front())) return false;
    return true;
  }

  // Partition of the vertex set induced by the 1-skeleton.
  std::vector<std::vector<int>> connected_components() const {
    auto vs = vertices();
    std::vector<int> parent(n_);
    for (int v = 0; v < n_; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (Mask f : faces_of_dim(1)) {
      auto b = mask_bits(f);
      parent[find(b[0])] = find(b[1]);
    }
    std::vector<std::vector<int>> comps;
    for (int v : vs) {
      if (find(v) != v) continue;
      std::vector<int> comp;
      for (int w : vs)
        if (find(w) == find(v)) comp.push_back(w);
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // True iff v is a vertex and every face extends by v inside the complex.
  bool is_cone(int v) const {
    if (v < 0 || v >= n_ || !contains(bit(v))) return false;
    for (Mask f : faces_)
      if (!contains(f | bit(v))) return false;
    return true;
  }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<Mask> faces)
      : n_(n), faces_(std::move(faces)) {
    if (n < 0 || n > kMaxVars) throw LengthMismatch("ground set size out of range");
  }

  int n_ = 0;
  std::vector<Mask> faces_;  // ascending by mask value
};

// lk_D(F) = { G : G disjoint from F, G union F in D }.  Void when F is not a face.
inline SimplicialComplex link(const SimplicialComplex& D, Mask F) {
  std::vector<Mask> faces;
  for (Mask g : D.faces())
    if ((g & F) == 0 && D.contains(g | F)) faces.push_back(g);
  return SimplicialComplex::from_faces(D.ground(), std::move(faces));
}

// st_D(F) = { G in D : G union F in D }.
inline SimplicialComplex star(const SimplicialComplex& D, Mask F) {
  std::vector<Mask> faces;
  for (Mask g : D.faces())
    if (D.contains(g | F)) faces.push_back(g);
  return SimplicialComplex::from_faces(D.ground(), std::move(faces));
}

// Stanley-Reisner complex of a square-free monomial ideal: faces are the
// subsets containing no generator's support.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw NotSquareFree("Stanley-Reisner input must be square-free");
  const int n = I.nvars();
  std::vector<Mask> faces;
  for (Mask f : submasks(full_mask(n))) {
    bool ok = true;
    for (const auto& u : I.gens())
      if ((u.support() & ~f) == 0) {
        ok = false;
        break;
      }
    if (ok) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

// The degree complex of I at a: faces are F - G_a for the admitted F >= G_a.
// Vertices keep their ambient labels; G_a itself contributes the empty face,
// so the complex is void exactly when no F is admitted at a.
inline SimplicialComplex degree_complex(const MonomialIdeal& I,
                                        const MultiDegree& a) {
  if (a.nvars() != I.nvars()) throw LengthMismatch("degree arity differs from ring");
  const Mask g = a.g_mask();
  const Mask rest = full_mask(I.nvars()) & ~g;
  std::vector<Mask> faces;
  for (Mask s : submasks(rest))
    if (admits(I, a.a, g | s)) faces.push_back(s);
  return SimplicialComplex::from_faces(I.nvars(), std::move(faces));
}

}  // namespace locoh
