#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <utility>
#include <vector>

#include "locoh/bits.hpp"
#include "locoh/errors.hpp"

namespace locoh {

// A monomial in n variables, stored as its exponent vector.
// Exponents are small nonnegative ints; the constant monomial (all zeros)
// is representable but rejected as an ideal generator.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
      if (x < 0) throw NonPositiveExponent("negative exponent in monomial");
  }

  // Convenience for tests and constructions: x_{var}^{exp} factors, 0-based vars.
  static Monomial from_pairs(int n, const std::vector<std::pair<int, int>>& factors) {
    std::vector<int> e(n, 0);
    for (auto [v, x] : factors) {
      if (v < 0 || v >= n) throw LengthMismatch("variable index out of range");
      if (x <= 0) throw NonPositiveExponent("factor exponent must be >= 1");
      e[v] += x;
    }
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int j) const { return e_[j]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  long total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

  Mask support() const {
    Mask m = 0;
    for (int j = 0; j < nvars(); ++j)
      if (e_[j] > 0) m |= bit(j);
    return m;
  }

  bool divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw LengthMismatch("monomial arity mismatch");
    for (int j = 0; j < nvars(); ++j)
      if (e_[j] > other.e_[j]) return false;
    return true;
  }

  Monomial squarefree_part() const {
    std::vector<int> e(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) e[j] = e_[j] > 0 ? 1 : 0;
    return Monomial(std::move(e));
  }

  bool is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x <= 1; });
  }

  // Lexicographic order on exponent vectors; used only as a canonical sort key.
  auto operator<=>(const Monomial& other) const { return e_ <=> other.e_; }
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> e_;
};

}  // namespace locoh
