#pragma once

// Exact k-Buchsbaum index.  When every H^i below the top index has finite
// length, all of its nonzero pieces live in the box 0 <= a <= rho-1 (pieces
// with a negative coordinate would force infinite length, pieces above the
// box vanish by the cone argument).  Multiplication by a monomial x^b is then
// a composite of single steps inside that box, and m^k kills everything iff
// k exceeds the largest |b| with a nonzero composite.

#include <map>
#include <numeric>
#include <vector>

#include "locoh/analyzer.hpp"
#include "locoh/cech.hpp"

namespace locoh {

struct KBuchsbaumResult {
  enum class Kind { finite, above_cap, infinite };
  Kind kind = Kind::finite;
  long k = 0;        // exact index when finite or above_cap
  bool vacuous = false;  // no nonzero H^i below the top at all
};

namespace detail {

template <class Ops>
long max_nonzero_shift(const Ops& ops, const MonomialIdeal& I, int d) {
  const int n = I.nvars();
  const std::vector<int> rho = I.rho();

  std::vector<std::vector<int>> box;
  {
    std::vector<int> a(n, 0);
    while (true) {
      box.push_back(a);
      int j = n - 1;
      while (j >= 0 && a[j] == rho[j] - 1) --j;
      if (j < 0) break;
      ++a[j];
      for (int k = j + 1; k < n; ++k) a[k] = 0;
    }
  }

  long max_shift = -1;  // |b| of the largest surviving composite; -1 = vacuous
  for (int i = 0; i < d; ++i) {
    std::map<std::vector<int>, CohomologyPresentation<Ops>> pres;
    for (const auto& a : box)
      pres.emplace(a, build_presentation(ops, I, MultiDegree(a), i));

    for (const auto& a : box) {
      const auto& src = pres.at(a);
      if (src.h == 0) continue;
      // Identity survives: |b| = 0 is always a nonzero composite here.
      max_shift = std::max(max_shift, 0L);
      // comp[c] = induced map H^i_a -> H^i_c along any monotone path.
      std::map<std::vector<int>, FMat<Ops>> comp;
      FMat<Ops> id(src.h, src.h, ops.zero());
      for (long t = 0; t < src.h; ++t) id(t, t) = ops.one();
      comp.emplace(a, std::move(id));
      for (const auto& c : box) {
        if (c == a) continue;
        bool ge = true;
        for (int j = 0; j < n; ++j)
          if (c[j] < a[j]) ge = false;
        if (!ge) continue;
        int j = 0;
        while (c[j] == a[j]) ++j;  // first coordinate that moved
        std::vector<int> prev = c;
        --prev[j];
        // box iterates lexicographically, so prev was already handled.
        const auto& step_src = pres.at(prev);
        const auto& step_dst = pres.at(c);
        const FMat<Ops> step = induced_step(ops, step_src, step_dst);
        const FMat<Ops> total = fmul(ops, step, comp.at(prev));
        if (!fis_zero(ops, total)) {
          long shift = 0;
          for (int t = 0; t < n; ++t) shift += c[t] - a[t];
          max_shift = std::max(max_shift, shift);
        }
        comp.emplace(c, std::move(total));
      }
    }
  }
  return max_shift;
}

}  // namespace detail

inline KBuchsbaumResult k_buchsbaum_index(const MonomialIdeal& I, const FieldSpec& K,
                                          long cap = -1) {
  const std::vector<int> rho = I.rho();
  const long bound =
      std::accumulate(rho.begin(), rho.end(), 0L) - I.nvars() + 1;
  if (cap < 0) cap = bound + 2;
  if (cap < 1) throw PreconditionViolation("cap must be >= 1");

  KBuchsbaumResult R;
  if (!is_generalized_cm(I, K)) {
    R.kind = KBuchsbaumResult::Kind::infinite;
    return R;
  }
  const int d = stanley_reisner_complex(radical(I)).dimension() + 1;

  long max_shift = -1;
  if (K.kind == FieldSpec::Kind::rationals) {
    max_shift = detail::max_nonzero_shift(RationalOps{}, I, d);
  } else {
    max_shift = detail::max_nonzero_shift(PrimeOps(K.p), I, d);
  }

  if (max_shift < 0) {
    R.k = 1;
    R.vacuous = true;
    return R;
  }
  R.k = max_shift + 1;
  if (R.k > bound)
    throw TheoremViolation("k-Buchsbaum index exceeds the rho-sum bound");
  if (R.k > cap) R.kind = KBuchsbaumResult::Kind::above_cap;
  return R;
}

}  // namespace locoh
