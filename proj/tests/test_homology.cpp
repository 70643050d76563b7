#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "locoh/homology.hpp"
#include "locoh/random_ideals.hpp"

using namespace locoh;
using fx::face;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  // Random facets over n vertices.
  std::vector<Mask> facets;
  const int count = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) {
    Mask f = static_cast<Mask>(rng()) & full_mask(n);
    if (f != 0) facets.push_back(f);
  }
  if (facets.empty()) return SimplicialComplex::irrelevant_complex(n);
  return SimplicialComplex::from_facets(n, facets);
}
}  // namespace

TEST_CASE("boundary matrix signs") {
  auto D = SimplicialComplex::from_facets(2, {face({1, 2})});
  auto M = boundary_matrix(D, 1);
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 1);
  // del {1,2} = {2} - {1}; rows sorted by mask, so {1} first.
  CHECK(M(0, 0) == -1);
  CHECK(M(1, 0) == 1);
  // Every vertex maps to the empty face with +1.
  auto M0 = boundary_matrix(D, 0);
  REQUIRE(M0.rows() == 1);
  REQUIRE(M0.cols() == 2);
  CHECK(M0(0, 0) == 1);
  CHECK(M0(0, 1) == 1);
}

TEST_CASE("del compose del is zero") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto D = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    for (int i = 1; i <= D.dimension(); ++i) {
      auto comp = multiply(boundary_matrix(D, i), boundary_matrix(D, i + 1));
      if (!comp.empty()) CHECK(is_zero_matrix(comp));
    }
  }
}

TEST_CASE("homology of the standard small complexes") {
  auto V = reduced_homology(SimplicialComplex::void_complex(4), Q);
  CHECK(V.all_zero());
  CHECK(V.dims.empty());

  auto E = reduced_homology(SimplicialComplex::irrelevant_complex(4), Q);
  CHECK(E.at(-1) == 1);
  CHECK(E.at(0) == 0);
  CHECK_FALSE(E.all_zero());

  auto P = reduced_homology(SimplicialComplex::from_facets(3, {face({1})}), Q);
  CHECK(P.all_zero());

  auto T = reduced_homology(fx::hollow_triangle(), Q);
  CHECK(T.at(1) == 1);
  CHECK(T.at(0) == 0);
  CHECK(T.at(-1) == 0);

  auto D2 = reduced_homology(fx::two_disjoint_edges(), Q);
  CHECK(D2.at(0) == 1);
  CHECK(D2.at(1) == 0);

  auto S = reduced_homology(SimplicialComplex::from_facets(3, {face({1, 2, 3})}), Q);
  CHECK(S.all_zero());

  // Hollow tetrahedron: a 2-sphere.
  auto H = reduced_homology(
      SimplicialComplex::from_facets(
          4, {face({1, 2, 3}), face({1, 2, 4}), face({1, 3, 4}), face({2, 3, 4})}),
      Q);
  CHECK(H.at(2) == 1);
  CHECK(H.at(1) == 0);
  CHECK(H.at(0) == 0);
}

TEST_CASE("projective plane distinguishes fields") {
  auto D = fx::rp2();
  CHECK(D.faces_of_dim(2).size() == 10);
  CHECK(D.faces_of_dim(1).size() == 15);
  CHECK(D.is_pure());

  auto over_q = reduced_homology(D, Q);
  CHECK(over_q.at(0) == 0);
  CHECK(over_q.at(1) == 0);
  CHECK(over_q.at(2) == 0);

  auto over_2 = reduced_homology(D, F2);
  CHECK(over_2.at(0) == 0);
  CHECK(over_2.at(1) == 1);
  CHECK(over_2.at(2) == 1);

  // Odd characteristic behaves like the rationals here.
  auto over_3 = reduced_homology(D, FieldSpec::prime(3));
  CHECK(over_3.at(1) == 0);
  CHECK(over_3.at(2) == 0);
}

TEST_CASE("cohomology agrees with homology over a field") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 60; ++trial) {
    auto D = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    CHECK(cohomology_matches_homology(D, Q));
    CHECK(cohomology_matches_homology(D, F2));
  }
  CHECK(cohomology_matches_homology(fx::rp2(), F2));
  CHECK(cohomology_matches_homology(fx::rp2(), Q));
}

TEST_CASE("euler characteristic equals alternating homology sum") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    auto D = random_complex(rng, 2 + static_cast<int>(rng() % 5));
    const long chi = reduced_euler_characteristic(D);
    for (const auto& K : {Q, F2}) {
      auto H = reduced_homology(D, K);
      long alt = 0;
      for (const auto& [i, d] : H.dims) alt += (i % 2 == 0 ? d : -d);
      // Degree -1 contributes with sign -1: (-1)^{-1} = -1.
      CHECK(alt == chi);
    }
  }
  CHECK(reduced_euler_characteristic(SimplicialComplex::void_complex(3)) == 0);
  CHECK(reduced_euler_characteristic(SimplicialComplex::irrelevant_complex(3)) == -1);
}
