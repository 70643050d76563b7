#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "locoh/monomial.hpp"

namespace locoh {

// A monomial ideal in K[x_1..x_n], held by its unique minimal generating set,
// sorted lexicographically.  The zero ideal (no generators) is allowed; the
// unit ideal is not constructible (constant generators are rejected).
class MonomialIdeal {
 public:
  // Minimalizes the given generators: validates arity, rejects constants,
  // removes duplicates and anything divisible by another generator.
  static MonomialIdeal from_generators(int n, std::vector<Monomial> raw) {
    if (n < 0 || n > kMaxVars) throw LengthMismatch("variable count out of range");
    for (const auto& u : raw) {
      if (u.nvars() != n) throw LengthMismatch("generator arity differs from ring");
      if (u.is_constant()) throw ConstantGenerator("constant monomial as generator");
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // After dedupe any remaining divisor is strict, so this keeps exactly the
    // divisibility-minimal elements.
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
        redundant = (j != i && raw[j].divides(raw[i]));
      if (!redundant) kept.push_back(raw[i]);
    }
    return MonomialIdeal(n, std::move(kept));
  }

  int nvars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& u) { return u.is_squarefree(); });
  }

  // rho_j = max exponent of x_j over the generators, with the convention
  // rho_j = 1 when x_j appears in none of them.  Always >= 1.
  std::vector<int> rho() const {
    std::vector<int> r(n_, 0);
    for (const auto& u : gens_)
      for (int j = 0; j < n_; ++j) r[j] = std::max(r[j], u.exponent(j));
    for (int j = 0; j < n_; ++j)
      if (r[j] == 0) r[j] = 1;
    return r;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  int n_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> sq;
  sq.reserve(I.gens().size());
  for (const auto& u : I.gens()) sq.push_back(u.squarefree_part());
  return MonomialIdeal::from_generators(I.nvars(), std::move(sq));
}

// Generators split into pure powers x_j^{rho_j} and the rest.  By minimality a
// pure-power generator of x_j is automatically x_j^{rho_j}.  m_mask collects
// the variables that generate no pure power (variables absent from all
// generators included); these are exactly the vertices of the Stanley-Reisner
// complex of the radical.
struct GeneratorSplit {
  std::map<int, int> pure_powers;  // variable -> exponent
  std::vector<Monomial> mixed;     // generators with support of size >= 2
  Mask m_mask = 0;
};

inline GeneratorSplit split_generators(const MonomialIdeal& I) {
  GeneratorSplit out;
  out.m_mask = full_mask(I.nvars());
  for (const auto& u : I.gens()) {
    Mask s = u.support();
    if (card(s) == 1) {
      int j = mask_bits(s)[0];
      out.pure_powers[j] = u.exponent(j);
      out.m_mask &= ~bit(j);
    } else {
      out.mixed.push_back(u);
    }
  }
  return out;
}

// Raises each generator x_{j1}^{e1}..x_{jk}^{ek} to x_{j1}^{a_{j1} e1}..,
// i.e. applies the exponent-scaling endomorphism x_j -> x_j^{a_j}.
inline MonomialIdeal frobenius_transform(const MonomialIdeal& I,
                                         const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != I.nvars())
    throw LengthMismatch("exponent vector arity differs from ring");
  for (int x : a)
    if (x < 1) throw NonPositiveExponent("frobenius exponents must be >= 1");
  std::vector<Monomial> out;
  out.reserve(I.gens().size());
  for (const auto& u : I.gens()) {
    std::vector<int> e(I.nvars());
    for (int j = 0; j < I.nvars(); ++j) e[j] = u.exponent(j) * a[j];
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(I.nvars(), std::move(out));
}

}  // namespace locoh
