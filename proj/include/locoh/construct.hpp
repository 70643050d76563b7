#pragma once

// Building candidates from square-free Buchsbaum seeds: each seed generator
// X_{j1}..X_{jp} is replaced by one or more monomials X_{j1}^{e1}..X_{jp}^{ep}
// with e >= 1, which never changes the radical.  The search enumerates such
// assignments inside an exponent box and classifies each result.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "locoh/analyzer.hpp"
#include "locoh/characterizations.hpp"

namespace locoh {

// tuples[g] lists the exponent tuples chosen for seed generator g; every
// tuple is aligned with the ascending variable order of that generator's
// support.  Tuples are kept sorted per generator to make the form canonical.
struct ExponentAssignment {
  std::vector<std::vector<std::vector<int>>> tuples;

  bool operator==(const ExponentAssignment&) const = default;
  auto operator<=>(const ExponentAssignment&) const = default;
};

inline MonomialIdeal apply_assignment(const MonomialIdeal& J,
                                      const ExponentAssignment& A) {
  if (!J.is_squarefree()) throw NotSquareFree("assignment seeds must be square-free");
  if (A.tuples.size() != J.gens().size())
    throw LengthMismatch("assignment arity differs from seed generator count");
  std::vector<Monomial> out;
  for (std::size_t g = 0; g < J.gens().size(); ++g) {
    const auto supp = mask_bits(J.gens()[g].support());
    if (A.tuples[g].empty())
      throw PreconditionViolation("every seed generator needs at least one tuple");
    for (const auto& tuple : A.tuples[g]) {
      if (tuple.size() != supp.size())
        throw LengthMismatch("tuple length differs from generator support");
      std::vector<int> e(J.nvars(), 0);
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (tuple[k] < 1) throw NonPositiveExponent("assignment exponents must be >= 1");
        e[supp[k]] = tuple[k];
      }
      out.emplace_back(std::move(e));
    }
  }
  MonomialIdeal I = MonomialIdeal::from_generators(J.nvars(), std::move(out));
  if (radical(I) != J)
    throw TheoremViolation("assignment changed the radical");  // unreachable for e >= 1
  return I;
}

// Ring symmetries of the seed: variable permutations fixing the generator set.
// Brute force over all n! permutations; seeds at this scale have few variables.
inline std::vector<std::vector<int>> seed_symmetries(const MonomialIdeal& J) {
  const int n = J.nvars();
  std::vector<std::vector<int>> group;
  if (n > 8) {  // identity only; pruning stays correct, just weaker
    std::vector<int> id(n);
    for (int v = 0; v < n; ++v) id[v] = v;
    return {id};
  }
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::vector<Monomial> sorted_gens = J.gens();
  do {
    std::vector<Monomial> mapped;
    mapped.reserve(sorted_gens.size());
    for (const auto& u : sorted_gens) {
      std::vector<int> e(n, 0);
      for (int v = 0; v < n; ++v) e[perm[v]] = u.exponent(v);
      mapped.emplace_back(std::move(e));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == sorted_gens) group.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

namespace detail {

// Image of an assignment under a seed symmetry, re-canonicalized.
inline ExponentAssignment permute_assignment(const MonomialIdeal& J,
                                             const ExponentAssignment& A,
                                             const std::vector<int>& perm) {
  const auto& gens = J.gens();
  ExponentAssignment out;
  out.tuples.resize(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto supp = mask_bits(gens[g].support());
    // Locate the image generator.
    std::vector<int> e(J.nvars(), 0);
    for (int v = 0; v < J.nvars(); ++v) e[perm[v]] = gens[g].exponent(v);
    const Monomial img(std::move(e));
    const auto it = std::lower_bound(gens.begin(), gens.end(), img);
    const std::size_t gp = static_cast<std::size_t>(it - gens.begin());
    const auto supp_img = mask_bits(img.support());
    for (const auto& tuple : A.tuples[g]) {
      std::vector<int> moved(tuple.size());
      for (std::size_t k = 0; k < supp.size(); ++k) {
        const int v_img = perm[supp[k]];
        const std::size_t pos = static_cast<std::size_t>(
            std::lower_bound(supp_img.begin(), supp_img.end(), v_img) - supp_img.begin());
        moved[pos] = tuple[k];
      }
      out.tuples[gp].push_back(std::move(moved));
    }
  }
  for (auto& list : out.tuples) std::sort(list.begin(), list.end());
  return out;
}

inline ExponentAssignment canonical_form(const MonomialIdeal& J,
                                         const ExponentAssignment& A,
                                         const std::vector<std::vector<int>>& group) {
  ExponentAssignment best = permute_assignment(J, A, group.front());
  for (std::size_t k = 1; k < group.size(); ++k) {
    ExponentAssignment cand = permute_assignment(J, A, group[k]);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace detail

enum class DecisionPath { automatic, characterization, homological };

// Classifies one ideal whose radical complex has the given dimension.
inline bool gcm_verdict(const MonomialIdeal& I, DecisionPath path, int dim_delta,
                        const FieldSpec& K) {
  const bool char_applicable = (dim_delta == 1 || dim_delta == 2);
  if (path == DecisionPath::characterization && !char_applicable)
    throw DimensionMismatch("characterization path needs dimension 2 or 3");
  const bool use_char =
      (path == DecisionPath::characterization) ||
      (path == DecisionPath::automatic && char_applicable);
  if (use_char) return dim_delta == 1 ? check_dim2(I) : check_dim3(I);
  return is_generalized_cm(I, K);
}

struct SearchEntry {
  ExponentAssignment assignment;
  MonomialIdeal ideal;
  bool gcm = false;
};

// Exhaustive assignment enumeration over exponents in [1,B] with at most T
// tuples per generator.  Verdicts are computed once per symmetry class of the
// seed's automorphisms and propagated across each orbit; entries come back in
// enumeration (odometer) order.
inline std::vector<SearchEntry> exponent_search(const MonomialIdeal& J, int B, int T,
                                                DecisionPath path = DecisionPath::automatic,
                                                const FieldSpec& K = FieldSpec::rationals()) {
  if (!J.is_squarefree()) throw NotSquareFree("search seeds must be square-free");
  if (B < 1 || T < 1) throw PreconditionViolation("bounds must be >= 1");
  const SimplicialComplex D = stanley_reisner_complex(J);
  const int dim_delta = D.dimension();
  if (!gcm_verdict(J, path, dim_delta, K))
    throw SeedNotGeneralizedCM("seed ideal is not generalized Cohen-Macaulay");

  // Per-generator menu: all nonempty sorted tuple sets of size <= T.
  std::vector<std::vector<std::vector<std::vector<int>>>> menus;
  for (const auto& u : J.gens()) {
    const int p = card(u.support());
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(p, 1);
    while (true) {
      tuples.push_back(t);
      int k = p - 1;
      while (k >= 0 && t[k] == B) --k;
      if (k < 0) break;
      ++t[k];
      for (int j = k + 1; j < p; ++j) t[j] = 1;
    }
    std::vector<std::vector<std::vector<int>>> menu;
    const std::size_t nt = tuples.size();
    std::vector<std::size_t> pick;
    // All subsets of size 1..T in lexicographic index order.
    auto emit = [&]() {
      std::vector<std::vector<int>> set;
      for (auto idx : pick) set.push_back(tuples[idx]);
      menu.push_back(std::move(set));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!pick.empty()) emit();
      if (pick.size() == static_cast<std::size_t>(T)) return;
      for (std::size_t idx = from; idx < nt; ++idx) {
        pick.push_back(idx);
        rec(idx + 1);
        pick.pop_back();
      }
    };
    rec(0);
    menus.push_back(std::move(menu));
  }

  const auto group = seed_symmetries(J);
  std::map<ExponentAssignment, bool> verdict_cache;
  std::vector<SearchEntry> out;
  std::vector<std::size_t> at(menus.size(), 0);
  while (true) {
    ExponentAssignment A;
    A.tuples.reserve(menus.size());
    for (std::size_t g = 0; g < menus.size(); ++g) A.tuples.push_back(menus[g][at[g]]);
    MonomialIdeal I = apply_assignment(J, A);
    const ExponentAssignment canon = detail::canonical_form(J, A, group);
    auto it = verdict_cache.find(canon);
    if (it == verdict_cache.end()) {
      const bool v = gcm_verdict(I, path, dim_delta, K);
      it = verdict_cache.emplace(canon, v).first;
    }
    out.push_back(SearchEntry{std::move(A), std::move(I), it->second});

    int g = static_cast<int>(menus.size()) - 1;
    while (g >= 0 && at[g] + 1 == menus[g].size()) --g;
    if (g < 0) break;
    ++at[g];
    for (std::size_t k = g + 1; k < menus.size(); ++k) at[k] = 0;
  }
  return out;
}

// The two-block seed (X_1..X_n)(X_{n+1}..X_{2n}).
inline MonomialIdeal two_block_seed(int n) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gens.push_back(Monomial::from_pairs(2 * n, {{i, 1}, {n + j, 1}}));
  return MonomialIdeal::from_generators(2 * n, std::move(gens));
}

struct FrobeniusFamilyResult {
  bool skipped = false;    // n = 1: everything in sight is CM, nothing to classify
  bool verified = false;
  long assignments = 0;
  std::optional<ExponentAssignment> counterexample;
};

// For the two-block seed, truth of "generalized CM iff the exponents are a
// Frobenius image" over the whole single-tuple box [1,B], evaluated through
// the characterization path and, for n <= 3, the homological path as well.
// Both must agree with the constancy predicate on every assignment.
inline FrobeniusFamilyResult verify_only_frobenius_family(int n, int B,
                                                          const FieldSpec& K =
                                                              FieldSpec::rationals()) {
  FrobeniusFamilyResult R;
  if (n == 1) {
    R.skipped = true;
    R.verified = true;
    return R;
  }
  const MonomialIdeal J = two_block_seed(n);
  const auto entries = exponent_search(J, B, 1, DecisionPath::automatic, K);
  const int dim_delta = stanley_reisner_complex(J).dimension();
  const bool run_homological = (dim_delta == 1 || dim_delta == 2);

  // Homological verdicts once per symmetry class.
  const auto group = seed_symmetries(J);
  std::map<ExponentAssignment, bool> hom_cache;

  for (const auto& entry : entries) {
    // Constancy: alpha_{i,-} constant for each left block variable i and
    // beta_{-,j} constant for each right block variable j.
    bool constant = true;
    std::vector<std::map<int, int>> alpha(n), beta(n);
    for (std::size_t g = 0; g < J.gens().size(); ++g) {
      const auto supp = mask_bits(J.gens()[g].support());
      const int i = supp[0], j = supp[1] - n;
      const int a = entry.assignment.tuples[g][0][0];
      const int b = entry.assignment.tuples[g][0][1];
      alpha[i][j] = a;
      beta[j][i] = b;
    }
    for (int i = 0; i < n && constant; ++i)
      for (const auto& [j, a] : alpha[i])
        if (a != alpha[i].begin()->second) constant = false;
    for (int j = 0; j < n && constant; ++j)
      for (const auto& [i, b] : beta[j])
        if (b != beta[j].begin()->second) constant = false;

    bool hom = entry.gcm;
    if (run_homological) {
      const auto canon = detail::canonical_form(J, entry.assignment, group);
      auto it = hom_cache.find(canon);
      if (it == hom_cache.end())
        it = hom_cache.emplace(canon, is_generalized_cm(entry.ideal, K)).first;
      hom = it->second;
    }

    ++R.assignments;
    if (entry.gcm != constant || hom != constant) {
      R.counterexample = entry.assignment;
      R.verified = false;
      return R;
    }
  }
  R.verified = true;
  return R;
}

}  // namespace locoh
