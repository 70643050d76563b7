#pragma once

// Deterministic corpora for the cross-check suites.  Modulo-based draws keep
// the streams identical across standard library implementations, which in
// turn keeps report bytes stable for a fixed seed.

#include <random>
#include <vector>

#include "locoh/ideal.hpp"
#include "locoh/simplicial.hpp"

namespace locoh {

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct CorpusParams {
  int n_min = 2;
  int n_max = 5;
  int max_gens = 8;
  int rho_max = 3;
  bool squarefree = false;
};

inline MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusParams& p) {
  const int n = rand_int(rng, p.n_min, p.n_max);
  const int g = rand_int(rng, 0, p.max_gens);
  std::vector<Monomial> gens;
  for (int k = 0; k < g; ++k) {
    std::vector<int> e(n, 0);
    const int supp_size = rand_int(rng, 1, n);
    for (int s = 0; s < supp_size; ++s) {
      const int v = rand_int(rng, 0, n - 1);
      e[v] = p.squarefree ? 1 : rand_int(rng, 1, p.rho_max);
    }
    // Repeated v just rerolls that exponent; support can come out smaller
    // than supp_size, which only adds variety.
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(n, gens);
}

// Rejection-samples until `count` ideals with the exact radical-complex
// dimension are collected.
inline std::vector<MonomialIdeal> corpus_with_dim(std::mt19937_64& rng,
                                                  const CorpusParams& p, int dim_delta,
                                                  int count) {
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    MonomialIdeal I = random_ideal(rng, p);
    if (stanley_reisner_complex(radical(I)).dimension() == dim_delta)
      out.push_back(std::move(I));
  }
  return out;
}

inline std::vector<MonomialIdeal> corpus(std::mt19937_64& rng, const CorpusParams& p,
                                         int count) {
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(random_ideal(rng, p));
  return out;
}

}  // namespace locoh
