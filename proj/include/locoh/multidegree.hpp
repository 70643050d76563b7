#pragma once

#include <vector>

#include "locoh/ideal.hpp"

namespace locoh {

// A point of Z^n acting as a multidegree.  G_a collects the strictly negative
// coordinates, H_a the strictly positive ones.
struct MultiDegree {
  std::vector<int> a;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> coords) : a(std::move(coords)) {}

  int nvars() const { return static_cast<int>(a.size()); }

  Mask g_mask() const {
    Mask m = 0;
    for (int j = 0; j < nvars(); ++j)
      if (a[j] < 0) m |= bit(j);
    return m;
  }

  Mask h_mask() const {
    Mask m = 0;
    for (int j = 0; j < nvars(); ++j)
      if (a[j] > 0) m |= bit(j);
    return m;
  }

  bool operator==(const MultiDegree&) const = default;
  auto operator<=>(const MultiDegree&) const = default;
};

// The basis-survival test for the localized module at degree a: the subset F
// admits a nonzero component iff F contains every negatively-graded variable
// and, for each generator, some variable outside F still exceeds its degree
// bound.  Both the degree complexes and the Cech bases reduce to this.
inline bool admits(const MonomialIdeal& I, const std::vector<int>& a, Mask F) {
  if (static_cast<int>(a.size()) != I.nvars())
    throw LengthMismatch("degree arity differs from ring");
  for (int j = 0; j < I.nvars(); ++j)
    if (a[j] < 0 && !has_bit(F, j)) return false;
  for (const Monomial& u : I.gens()) {
    bool witness = false;
    for (int j = 0; j < I.nvars() && !witness; ++j)
      witness = !has_bit(F, j) && u.exponent(j) > a[j];
    if (!witness) return false;
  }
  return true;
}

}  // namespace locoh
