#pragma once

// The combinatorial route: every graded piece of H^i_m(S/I) is read off the
// reduced homology of a degree complex.  Only finitely many degrees matter:
// one representative per face F of the radical's Stanley-Reisner complex and
// per box point 0 <= a_j <= rho_j - 1 outside F, with the coordinates on F
// pinned to -1 (the homology is independent of how negative they are).

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "locoh/homology.hpp"
#include "locoh/parallel.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

// Integer extended by the two infinities, for the a- and b-invariants.
struct ExtInt {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  long v = 0;

  static ExtInt neg_inf() { return {Kind::neg_inf, 0}; }
  static ExtInt pos_inf() { return {Kind::pos_inf, 0}; }
  static ExtInt of(long x) { return {Kind::finite, x}; }
  bool finite() const { return kind == Kind::finite; }

  std::string to_string() const {
    if (kind == Kind::neg_inf) return "-inf";
    if (kind == Kind::pos_inf) return "+inf";
    return std::to_string(v);
  }

  bool operator==(const ExtInt&) const = default;
};

struct RepresentativeDegree {
  Mask F = 0;          // the face; coordinates on F are fixed at -1
  std::vector<int> a;  // full degree vector: -1 on F, box values elsewhere

  MultiDegree degree() const { return MultiDegree(a); }
  bool operator==(const RepresentativeDegree&) const = default;
};

namespace detail {

// Box points over the coordinates outside F, odometer order with the highest
// variable index moving fastest (lexicographic in reading order).
inline void for_each_box_point(int n, Mask F, const std::vector<int>& rho,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0);
  for (int j = 0; j < n; ++j)
    if (has_bit(F, j)) a[j] = -1;
  while (true) {
    fn(a);
    int j = n - 1;
    while (j >= 0 && (has_bit(F, j) || a[j] == rho[j] - 1)) --j;
    if (j < 0) break;
    ++a[j];
    for (int k = j + 1; k < n; ++k)
      if (!has_bit(F, k)) a[k] = 0;
  }
}

}  // namespace detail

// All representatives, ordered by face (ascending mask) then box
// (lexicographic).  Their count is sum over faces of prod_{j notin F} rho_j.
inline std::vector<RepresentativeDegree> representative_degrees(const MonomialIdeal& I) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  const std::vector<int> rho = I.rho();
  std::vector<RepresentativeDegree> out;
  for (Mask F : D.faces())
    detail::for_each_box_point(I.nvars(), F, rho, [&](const std::vector<int>& a) {
      out.push_back(RepresentativeDegree{F, a});
    });
  return out;
}

struct TableEntry {
  int i = 0;
  Mask F = 0;
  std::vector<int> a;
  long dim = 0;

  bool operator==(const TableEntry&) const = default;
};

struct LocalCohomologyTable {
  int n = 0;
  int d = 0;  // Krull dimension of S/I
  FieldSpec field;
  std::vector<int> rho;
  bool squarefree = false;

  std::vector<TableEntry> entries;  // nonzero pieces only, in representative order

  // Derived data, all per cohomological index i = 0..d.
  int depth = 0;
  std::vector<char> flc;        // finite length at i
  bool gcm = false;             // flc at every i != d
  bool cm = false;              // depth == d
  std::vector<ExtInt> a_inv;    // max degree of a nonzero piece
  std::vector<ExtInt> b_inv;    // min degree of a nonzero piece
  std::vector<long> lengths;    // total dim when flc, else -1
  long reg = 0;                 // max over i of a_i + i
};

inline LocalCohomologyTable local_cohomology_table(const MonomialIdeal& I,
                                                   const FieldSpec& K,
                                                   int threads = 1) {
  LocalCohomologyTable T;
  T.n = I.nvars();
  T.field = K;
  T.rho = I.rho();
  T.squarefree = I.is_squarefree();
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  T.d = D.dimension() + 1;

  const auto reps = representative_degrees(I);
  std::vector<std::vector<TableEntry>> per_rep(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t r) {
    const auto& rep = reps[r];
    const int fsz = card(rep.F);
    const HomologyResult hom = reduced_homology(degree_complex(I, rep.degree()), K);
    for (const auto& [deg, dim] : hom.dims) {
      if (dim == 0) continue;
      const int i = deg + fsz + 1;
      per_rep[r].push_back(TableEntry{i, rep.F, rep.a, dim});
    }
  });
  for (auto& v : per_rep)
    for (auto& e : v) {
      if (e.i < 0 || e.i > T.d)
        throw TheoremViolation("nonzero piece at cohomological index " +
                               std::to_string(e.i) + " outside [0, dim]");
      T.entries.push_back(std::move(e));
    }
  std::stable_sort(T.entries.begin(), T.entries.end(),
                   [](const TableEntry& x, const TableEntry& y) {
                     if (x.i != y.i) return x.i < y.i;
                     if (x.F != y.F) return x.F < y.F;
                     return x.a < y.a;
                   });

  if (T.entries.empty())
    throw TheoremViolation("top local cohomology vanished; the ring is nonzero");

  // Derived invariants.
  T.depth = T.d;
  T.flc.assign(T.d + 1, 1);
  T.a_inv.assign(T.d + 1, ExtInt::neg_inf());
  T.b_inv.assign(T.d + 1, ExtInt::pos_inf());
  T.lengths.assign(T.d + 1, 0);
  for (const auto& e : T.entries) {
    T.depth = std::min(T.depth, e.i);
    const long total = std::accumulate(e.a.begin(), e.a.end(), 0L);
    if (!T.a_inv[e.i].finite() || total > T.a_inv[e.i].v) T.a_inv[e.i] = ExtInt::of(total);
    if (e.F != 0) {
      T.flc[e.i] = 0;
      T.b_inv[e.i] = ExtInt::neg_inf();
    } else if (T.b_inv[e.i].kind != ExtInt::Kind::neg_inf) {
      if (T.b_inv[e.i].kind == ExtInt::Kind::pos_inf || total < T.b_inv[e.i].v)
        T.b_inv[e.i] = ExtInt::of(total);
    }
  }
  for (int i = 0; i <= T.d; ++i) {
    if (!T.flc[i]) {
      T.lengths[i] = -1;
      continue;
    }
    for (const auto& e : T.entries)
      if (e.i == i) T.lengths[i] += e.dim;
  }
  T.gcm = true;
  for (int i = 0; i < T.d; ++i)
    if (!T.flc[i]) T.gcm = false;
  T.cm = (T.depth == T.d);
  T.reg = 0;
  bool have = false;
  for (int i = 0; i <= T.d; ++i)
    if (T.a_inv[i].finite()) {
      const long c = T.a_inv[i].v + i;
      if (!have || c > T.reg) T.reg = c;
      have = true;
    }
  return T;
}

// Finite length of H^i via the vanishing of every piece in a representative
// with nonempty face part.  Cheaper than the full table: box points with
// F = {} are never touched.
inline bool is_flc(const MonomialIdeal& I, int i, const FieldSpec& K) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  const int d = D.dimension() + 1;
  if (i < 0 || i > d) throw PreconditionViolation("cohomological index out of range");
  const std::vector<int> rho = I.rho();
  for (Mask F : D.faces()) {
    if (F == 0) continue;
    const int fsz = card(F);
    if (i - fsz - 1 < -1) continue;  // no reduced homology that low
    bool bad = false;
    detail::for_each_box_point(I.nvars(), F, rho, [&](const std::vector<int>& a) {
      if (bad) return;
      const HomologyResult hom = reduced_homology(degree_complex(I, MultiDegree(a)), K);
      if (hom.at(i - fsz - 1) != 0) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

// Generalized Cohen-Macaulay: every H^i with i != d has finite length.  One
// scan over the nonempty faces; all homology of each degree complex must sit
// in the single degree feeding i = d.
inline bool is_generalized_cm(const MonomialIdeal& I, const FieldSpec& K) {
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  const int d = D.dimension() + 1;
  const std::vector<int> rho = I.rho();
  for (Mask F : D.faces()) {
    if (F == 0) continue;
    const int fsz = card(F);
    bool bad = false;
    detail::for_each_box_point(I.nvars(), F, rho, [&](const std::vector<int>& a) {
      if (bad) return;
      const HomologyResult hom = reduced_homology(degree_complex(I, MultiDegree(a)), K);
      for (const auto& [deg, dim] : hom.dims)
        if (dim != 0 && deg != d - fsz - 1) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

inline bool is_cohen_macaulay(const MonomialIdeal& I, const FieldSpec& K) {
  const LocalCohomologyTable T = local_cohomology_table(I, K);
  return T.cm;
}

// ---- invariants report with the proved bounds checked on the way out ----

struct InvariantsReport {
  int dim = 0;
  int depth = 0;
  long reg = 0;
  std::vector<ExtInt> a_inv, b_inv;
  std::vector<long> lengths;
  bool gcm = false, cm = false;

  // Named checks; every applicable one must pass, and failures throw.
  std::map<std::string, bool> checks;
};

inline InvariantsReport invariants_report(const LocalCohomologyTable& T) {
  InvariantsReport R;
  R.dim = T.d;
  R.depth = T.depth;
  R.reg = T.reg;
  R.a_inv = T.a_inv;
  R.b_inv = T.b_inv;
  R.lengths = T.lengths;
  R.gcm = T.gcm;
  R.cm = T.cm;

  const long rho_sum = std::accumulate(T.rho.begin(), T.rho.end(), 0L);
  bool a_bound = true;
  for (const auto& a : T.a_inv)
    if (a.finite() && a.v > rho_sum - T.n) a_bound = false;
  R.checks["a_i_le_rho_sum_minus_n"] = a_bound;

  if (T.gcm) {
    bool b_ok = true;
    for (int i = 0; i < T.d; ++i)
      if (T.b_inv[i].kind == ExtInt::Kind::neg_inf ||
          (T.b_inv[i].finite() && T.b_inv[i].v < 0))
        b_ok = false;
    R.checks["b_i_nonneg_below_top_given_gcm"] = b_ok;

    bool window = true;
    for (int i = 0; i < T.d; ++i)
      if (i >= T.reg + 1 && T.a_inv[i].finite()) window = false;
    R.checks["vanishing_above_reg_below_top_given_gcm"] = window;
  }

  if (T.squarefree && T.gcm) {
    bool a_nonpos = true;
    for (const auto& a : T.a_inv)
      if (a.finite() && a.v > 0) a_nonpos = false;
    R.checks["squarefree_gcm_a_i_nonpos"] = a_nonpos;
  }

  for (const auto& [name, ok] : R.checks)
    if (!ok) throw TheoremViolation("invariant check failed: " + name);
  return R;
}

// ---- Hilbert series of each H^i, reported per face group ----

// The series of H^i is a finite sum over faces F and box points a of
// dim * t^a * prod_{j in F} t_j^{-1} / (1 - t_j^{-1}): the box part is the
// polynomial head and each variable of F contributes a geometric tail in
// negative degrees.
struct HilbertTerm {
  std::vector<int> a;  // representative vector, -1 on F
  long dim = 0;
  bool operator==(const HilbertTerm&) const = default;
};

struct HilbertGroup {
  int i = 0;
  Mask F = 0;
  std::vector<HilbertTerm> terms;
  bool operator==(const HilbertGroup&) const = default;
};

struct HilbertReport {
  int n = 0;
  int d = 0;
  FieldSpec field;
  std::vector<HilbertGroup> groups;  // ordered by (i, F)
};

inline HilbertReport hilbert_series_report(const LocalCohomologyTable& T) {
  HilbertReport R;
  R.n = T.n;
  R.d = T.d;
  R.field = T.field;
  std::map<std::pair<int, Mask>, std::vector<HilbertTerm>> grouped;
  for (const auto& e : T.entries)
    grouped[{e.i, e.F}].push_back(HilbertTerm{e.a, e.dim});
  for (auto& [key, terms] : grouped)
    R.groups.push_back(HilbertGroup{key.first, key.second, std::move(terms)});
  return R;
}

inline HilbertReport hilbert_series_report(const MonomialIdeal& I, const FieldSpec& K,
                                           int threads = 1) {
  return hilbert_series_report(local_cohomology_table(I, K, threads));
}

// ---- comparison against the radical ----

// In every degree with no positive coordinate the pieces of H^i(S/I) and
// H^i(S/sqrt(I)) agree; moreover generalized CM passes to the radical, and a
// generalized CM ideal whose radical fails CM fails CM itself.  All three are
// proved facts, so any mismatch is reported as a violation.
struct RadicalCompareReport {
  long degrees_compared = 0;
  bool dims_match = false;
  bool gcm_I = false, gcm_radical = false;
  bool cm_I = false, cm_radical = false;
  bool gcm_implication_ok = false;
  bool non_cm_implication_ok = false;
};

inline RadicalCompareReport radical_compare(const MonomialIdeal& I, const FieldSpec& K,
                                            int threads = 1) {
  const MonomialIdeal J = radical(I);
  const LocalCohomologyTable TI = local_cohomology_table(I, K, threads);
  const LocalCohomologyTable TJ = local_cohomology_table(J, K, threads);

  // Pieces at degrees with H_a = {}: box coordinates all zero.
  const auto nonpositive_slice = [](const LocalCohomologyTable& T) {
    std::map<std::pair<int, Mask>, long> out;
    for (const auto& e : T.entries) {
      bool nonpos = true;
      for (int c : e.a)
        if (c > 0) nonpos = false;
      if (nonpos) out[{e.i, e.F}] = e.dim;
    }
    return out;
  };
  const auto slice_I = nonpositive_slice(TI);
  const auto slice_J = nonpositive_slice(TJ);

  RadicalCompareReport R;
  const SimplicialComplex D = stanley_reisner_complex(J);
  R.degrees_compared = static_cast<long>(D.faces().size());
  R.dims_match = (slice_I == slice_J);
  R.gcm_I = TI.gcm;
  R.gcm_radical = TJ.gcm;
  R.cm_I = TI.cm;
  R.cm_radical = TJ.cm;
  R.gcm_implication_ok = !R.gcm_I || R.gcm_radical;
  R.non_cm_implication_ok = !(R.gcm_I && !R.cm_radical) || !R.cm_I;

  if (!R.dims_match)
    throw TheoremViolation("radical comparison: pieces differ in a nonpositive degree");
  if (!R.gcm_implication_ok)
    throw TheoremViolation("radical comparison: gCM did not pass to the radical");
  if (!R.non_cm_implication_ok)
    throw TheoremViolation("radical comparison: CM ideal with gCM and non-CM radical");
  return R;
}

}  // namespace locoh
