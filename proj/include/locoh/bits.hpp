#pragma once

// Subsets of the variable set {0,...,n-1} are stored as bitmasks.
// n is capped at 16 throughout; masks fit comfortably in 32 bits.

#include <bit>
#include <cstdint>
#include <vector>

namespace locoh {

using Mask = std::uint32_t;

constexpr int kMaxVars = 16;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr bool has_bit(Mask m, int v) { return (m >> v) & 1u; }

constexpr Mask full_mask(int n) { return (n == 0) ? 0u : ((Mask{1} << n) - 1u); }

inline int card(Mask m) { return std::popcount(m); }

// Position of v within m, counting set bits below v.  Used for boundary and
// coboundary signs: faces are always read in ascending vertex order.
inline int rank_in(Mask m, int v) { return std::popcount(m & (bit(v) - 1u)); }

inline std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1u;
  }
  return out;
}

// All submasks of sup, ascending by value.
inline std::vector<Mask> submasks(Mask sup) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << card(sup));
  Mask s = 0;
  while (true) {
    out.push_back(s);
    if (s == sup) break;
    s = (s - sup) & sup;  // next submask in value order
  }
  return out;
}

// All k-subsets of {0,...,n-1}, ascending by mask value (Gosper's hack).
inline std::vector<Mask> masks_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0u};
  Mask m = full_mask(k);
  Mask limit = full_mask(n);
  while (m <= limit) {
    out.push_back(m);
    Mask c = m & -m;
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
    if (c == 0) break;
  }
  return out;
}

}  // namespace locoh
