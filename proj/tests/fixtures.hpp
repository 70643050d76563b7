#pragma once

// Shared example ideals and complexes used across the test binaries.

#include <utility>
#include <vector>

#include "locoh/ideal.hpp"
#include "locoh/simplicial.hpp"

namespace fx {

using locoh::Mask;
using locoh::Monomial;
using locoh::MonomialIdeal;
using locoh::SimplicialComplex;

inline MonomialIdeal ideal_of(int n, const std::vector<std::vector<std::pair<int, int>>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(Monomial::from_pairs(n, g));
  return MonomialIdeal::from_generators(n, ms);
}

// Split two-block seed on 4 variables: (x1,x2)(x3,x4) with x1x3, x2x4 kept
// and the two cross generators split in two.
inline MonomialIdeal I1() {
  return ideal_of(4, {{{0, 1}, {2, 1}},
                      {{0, 2}, {3, 1}},
                      {{0, 1}, {3, 2}},
                      {{1, 2}, {2, 1}},
                      {{1, 1}, {2, 2}},
                      {{1, 1}, {3, 1}}});
}

// Split two-block seed on 6 variables, x1x4 made into two generators.
inline MonomialIdeal I2() {
  return ideal_of(6, {{{0, 3}, {3, 1}},
                      {{0, 1}, {3, 5}},
                      {{0, 1}, {4, 1}},
                      {{0, 1}, {5, 1}},
                      {{1, 1}, {3, 1}},
                      {{1, 1}, {4, 1}},
                      {{1, 1}, {5, 1}},
                      {{2, 1}, {3, 1}},
                      {{2, 1}, {4, 1}},
                      {{2, 1}, {5, 1}}});
}

// Like I2 but x1x4 made into three generators.
inline MonomialIdeal I3() {
  return ideal_of(6, {{{0, 3}, {3, 1}},
                      {{0, 2}, {3, 2}},
                      {{0, 1}, {3, 3}},
                      {{0, 1}, {4, 1}},
                      {{0, 1}, {5, 1}},
                      {{1, 1}, {3, 1}},
                      {{1, 1}, {4, 1}},
                      {{1, 1}, {5, 1}},
                      {{2, 1}, {3, 1}},
                      {{2, 1}, {4, 1}},
                      {{2, 1}, {5, 1}}});
}

// (x1,x2)(x3,x4): Buchsbaum of dimension 2.
inline MonomialIdeal J4() {
  return ideal_of(4, {{{0, 1}, {2, 1}}, {{0, 1}, {3, 1}}, {{1, 1}, {2, 1}}, {{1, 1}, {3, 1}}});
}

// J4 under x_i -> x_i^2.
inline MonomialIdeal frobJ() {
  return ideal_of(4, {{{0, 2}, {2, 2}}, {{0, 2}, {3, 2}}, {{1, 2}, {2, 2}}, {{1, 2}, {3, 2}}});
}

inline Mask face(std::initializer_list<int> verts1based) {
  Mask m = 0;
  for (int v : verts1based) m |= locoh::bit(v - 1);
  return m;
}

// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2() {
  std::vector<Mask> facets;
  for (auto f : {std::initializer_list<int>{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6},
                 {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}})
    facets.push_back(face(f));
  return SimplicialComplex::from_facets(6, facets);
}

inline SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets(3, {face({1, 2}), face({1, 3}), face({2, 3})});
}

inline SimplicialComplex two_disjoint_edges() {
  return SimplicialComplex::from_facets(4, {face({1, 2}), face({3, 4})});
}

}  // namespace fx
