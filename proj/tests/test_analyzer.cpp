#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "locoh/analyzer.hpp"
#include "locoh/random_ideals.hpp"

using namespace locoh;
using fx::face;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

using Entry = std::tuple<int, Mask, std::vector<int>, long>;

std::vector<Entry> entries_of(const LocalCohomologyTable& T) {
  std::vector<Entry> out;
  for (const auto& e : T.entries) out.emplace_back(e.i, e.F, e.a, e.dim);
  return out;
}

Entry ent(int i, Mask F, std::vector<int> a, long dim) { return {i, F, std::move(a), dim}; }
}  // namespace

TEST_CASE("representative degrees enumerate face-by-face boxes") {
  auto reps = representative_degrees(fx::I1());
  // 7 faces; 16 box points over the empty face, 8 per vertex, 4 per edge.
  CHECK(reps.size() == 56);
  std::set<std::pair<Mask, std::vector<int>>> seen;
  for (const auto& r : reps) {
    CHECK(seen.insert({r.F, r.a}).second);
    for (int j = 0; j < 4; ++j) {
      if (has_bit(r.F, j)) {
        CHECK(r.a[j] == -1);
      } else {
        CHECK(r.a[j] >= 0);
        CHECK(r.a[j] <= 1);
      }
    }
  }
  // Square-free: one box point per face.
  CHECK(representative_degrees(fx::J4()).size() == 7);
}

TEST_CASE("table of the split square I1") {
  auto T = local_cohomology_table(fx::I1(), Q);
  CHECK(T.n == 4);
  CHECK(T.d == 2);
  CHECK(T.depth == 0);
  CHECK(T.reg == 2);
  CHECK(T.gcm);
  CHECK_FALSE(T.cm);
  CHECK(T.flc == std::vector<char>{1, 1, 0});
  CHECK(T.lengths == std::vector<long>{2, 1, -1});
  CHECK(T.a_inv == std::vector<ExtInt>{ExtInt::of(2), ExtInt::of(0), ExtInt::of(-2)});
  CHECK(T.b_inv == std::vector<ExtInt>{ExtInt::of(2), ExtInt::of(0), ExtInt::neg_inf()});
  CHECK(entries_of(T) ==
        std::vector<Entry>{ent(0, 0, {0, 1, 1, 0}, 1), ent(0, 0, {1, 0, 0, 1}, 1),
                           ent(1, 0, {0, 0, 0, 0}, 1), ent(2, face({1, 2}), {-1, -1, 0, 0}, 1),
                           ent(2, face({3, 4}), {0, 0, -1, -1}, 1)});
  // Same table mod 2.
  CHECK(entries_of(local_cohomology_table(fx::I1(), F2)) == entries_of(T));
}

TEST_CASE("table of the 6-variable deformation I2") {
  auto T = local_cohomology_table(fx::I2(), Q);
  CHECK(T.d == 3);
  CHECK(T.depth == 0);
  CHECK(T.reg == 6);
  CHECK(T.gcm);
  CHECK_FALSE(T.cm);
  std::vector<Entry> expect;
  for (int a1 : {1, 2})
    for (int a4 : {1, 2, 3, 4}) expect.push_back(ent(0, 0, {a1, 0, 0, a4, 0, 0}, 1));
  expect.push_back(ent(1, 0, {0, 0, 0, 0, 0, 0}, 1));
  expect.push_back(ent(3, face({1, 2, 3}), {-1, -1, -1, 0, 0, 0}, 1));
  expect.push_back(ent(3, face({4, 5, 6}), {0, 0, 0, -1, -1, -1}, 1));
  CHECK(entries_of(T) == expect);
  // H^2 vanishes outright.
  CHECK(T.a_inv[2] == ExtInt::neg_inf());
  CHECK(T.b_inv[2] == ExtInt::pos_inf());
  CHECK(T.lengths[2] == 0);
}

TEST_CASE("table of the further deformation I3") {
  auto T = local_cohomology_table(fx::I3(), Q);
  CHECK(T.d == 3);
  CHECK(T.depth == 0);
  CHECK(T.reg == 3);
  CHECK(T.gcm);
  CHECK_FALSE(T.cm);
  CHECK(entries_of(T) ==
        std::vector<Entry>{ent(0, 0, {1, 0, 0, 1, 0, 0}, 1), ent(0, 0, {1, 0, 0, 2, 0, 0}, 1),
                           ent(0, 0, {2, 0, 0, 1, 0, 0}, 1), ent(1, 0, {0, 0, 0, 0, 0, 0}, 1),
                           ent(3, face({1, 2, 3}), {-1, -1, -1, 0, 0, 0}, 1),
                           ent(3, face({4, 5, 6}), {0, 0, 0, -1, -1, -1}, 1)});
  CHECK(entries_of(local_cohomology_table(fx::I3(), F2)) == entries_of(T));
}

TEST_CASE("tables of the square-free seed and its double") {
  auto TJ = local_cohomology_table(fx::J4(), Q);
  CHECK(TJ.d == 2);
  CHECK(TJ.depth == 1);
  CHECK(TJ.gcm);
  CHECK_FALSE(TJ.cm);
  CHECK(entries_of(TJ) ==
        std::vector<Entry>{ent(1, 0, {0, 0, 0, 0}, 1), ent(2, face({1, 2}), {-1, -1, 0, 0}, 1),
                           ent(2, face({3, 4}), {0, 0, -1, -1}, 1)});

  auto TF = local_cohomology_table(fx::frobJ(), Q);
  CHECK(TF.d == 2);
  CHECK(TF.depth == 1);
  CHECK(TF.reg == 5);
  CHECK(TF.gcm);
  // One H^1 piece per box point, one H^2 piece per box point of each edge.
  CHECK(TF.lengths[1] == 16);
  long h1 = 0, h2 = 0;
  for (const auto& e : TF.entries) {
    if (e.i == 1) ++h1;
    if (e.i == 2) ++h2;
    CHECK(e.dim == 1);
  }
  CHECK(h1 == 16);
  CHECK(h2 == 8);
}

TEST_CASE("zero ideal tables") {
  auto T3 = local_cohomology_table(MonomialIdeal::from_generators(3, {}), Q);
  CHECK(T3.d == 3);
  CHECK(T3.depth == 3);
  CHECK(T3.cm);
  CHECK(T3.gcm);
  CHECK(T3.reg == 0);
  CHECK(entries_of(T3) == std::vector<Entry>{ent(3, face({1, 2, 3}), {-1, -1, -1}, 1)});

  auto T1 = local_cohomology_table(MonomialIdeal::from_generators(1, {}), Q);
  CHECK(T1.d == 1);
  CHECK(T1.depth == 1);
  CHECK(entries_of(T1) == std::vector<Entry>{ent(1, face({1}), {-1}, 1)});
}

TEST_CASE("finite length three ways") {
  std::mt19937_64 rng(808);
  CorpusParams p;
  for (int trial = 0; trial < 30; ++trial) {
    auto I = random_ideal(rng, p);
    for (const auto& K : {Q, F2}) {
      auto T = local_cohomology_table(I, K);
      for (int i = 0; i <= T.d; ++i) {
        const bool scan = is_flc(I, i, K);
        bool table_finite = true;
        for (const auto& e : T.entries)
          if (e.i == i && e.F != 0) table_finite = false;
        CHECK(scan == table_finite);
        CHECK(static_cast<bool>(T.flc[i]) == table_finite);
      }
      bool gcm_direct = true;
      for (int i = 0; i < T.d; ++i)
        if (!T.flc[i]) gcm_direct = false;
      CHECK(is_generalized_cm(I, K) == gcm_direct);
      CHECK(T.gcm == gcm_direct);
    }
  }
}

TEST_CASE("square-free tables specialize to link homology") {
  std::mt19937_64 rng(809);
  CorpusParams p;
  p.squarefree = true;
  p.n_max = 6;
  for (int trial = 0; trial < 100; ++trial) {
    auto I = random_ideal(rng, p);
    auto D = stanley_reisner_complex(I);
    auto T = local_cohomology_table(I, Q);
    std::map<std::pair<int, Mask>, long> got;
    for (const auto& e : T.entries) got[{e.i, e.F}] = e.dim;
    std::map<std::pair<int, Mask>, long> expect;
    for (Mask F : D.faces()) {
      auto H = reduced_homology(link(D, F), Q);
      for (const auto& [deg, dim] : H.dims)
        if (dim != 0) expect[{deg + card(F) + 1, F}] = dim;
    }
    CHECK(got == expect);
  }
}

TEST_CASE("representative pruning is sound on the widened grid") {
  std::mt19937_64 rng(810);
  CorpusParams p;
  p.n_max = 4;
  p.rho_max = 3;
  for (int trial = 0; trial < 6; ++trial) {
    auto I = random_ideal(rng, p);
    const int n = I.nvars();
    const auto rho = I.rho();
    auto T = local_cohomology_table(I, Q);
    std::map<std::pair<Mask, std::vector<int>>, std::map<int, long>> table;
    for (const auto& e : T.entries) table[{e.F, e.a}][e.i] = e.dim;

    // Walk every degree with coordinates in [-2, rho_j]; compare against the
    // table entry of its representative.
    std::vector<int> a(n, -2);
    while (true) {
      MultiDegree d(a);
      const Mask F = d.g_mask();
      bool above = false;
      for (int j = 0; j < n; ++j)
        if (a[j] >= rho[j]) above = true;
      auto H = reduced_homology(degree_complex(I, d), Q);
      if (above) {
        CHECK(H.all_zero());
      } else {
        std::vector<int> rep = a;
        for (int j = 0; j < n; ++j)
          if (rep[j] < 0) rep[j] = -1;
        std::map<int, long> expect;
        auto it = table.find({F, rep});
        if (it != table.end()) expect = it->second;
        std::map<int, long> got;
        for (const auto& [deg, dim] : H.dims)
          if (dim != 0) got[deg + card(F) + 1] = dim;
        CHECK(got == expect);
      }
      int j = n - 1;
      while (j >= 0 && a[j] == rho[j]) --j;
      if (j < 0) break;
      ++a[j];
      for (int k = j + 1; k < n; ++k) a[k] = -2;
    }
  }
}

TEST_CASE("parallel tables equal sequential ones") {
  std::mt19937_64 rng(811);
  CorpusParams p;
  for (int trial = 0; trial < 10; ++trial) {
    auto I = random_ideal(rng, p);
    auto T1 = local_cohomology_table(I, Q, 1);
    auto T4 = local_cohomology_table(I, Q, 4);
    CHECK(entries_of(T1) == entries_of(T4));
    CHECK(T1.depth == T4.depth);
  }
}

TEST_CASE("invariants report checks pass on the corpus") {
  std::mt19937_64 rng(812);
  CorpusParams p;
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_ideal(rng, p);
    auto T = local_cohomology_table(I, Q);
    InvariantsReport R;
    REQUIRE_NOTHROW(R = invariants_report(T));
    CHECK(R.dim == T.d);
    CHECK(R.depth <= R.dim);
    CHECK(R.checks.at("a_i_le_rho_sum_minus_n"));
  }
  auto R1 = invariants_report(local_cohomology_table(fx::I1(), Q));
  CHECK(R1.checks.size() == 3);
  CHECK(R1.checks.at("b_i_nonneg_below_top_given_gcm"));
  CHECK(R1.checks.at("vanishing_above_reg_below_top_given_gcm"));
  auto RJ = invariants_report(local_cohomology_table(fx::J4(), Q));
  CHECK(RJ.checks.size() == 4);
  CHECK(RJ.checks.at("squarefree_gcm_a_i_nonpos"));
}

TEST_CASE("hilbert report groups terms by index and face") {
  auto R = hilbert_series_report(fx::I1(), Q);
  CHECK(R.n == 4);
  CHECK(R.d == 2);
  REQUIRE(R.groups.size() == 4);
  CHECK(R.groups[0].i == 0);
  CHECK(R.groups[0].F == 0);
  REQUIRE(R.groups[0].terms.size() == 2);
  CHECK(R.groups[0].terms[0] == HilbertTerm{{0, 1, 1, 0}, 1});
  CHECK(R.groups[0].terms[1] == HilbertTerm{{1, 0, 0, 1}, 1});
  CHECK(R.groups[1].i == 1);
  CHECK(R.groups[1].terms.size() == 1);
  CHECK(R.groups[2].i == 2);
  CHECK(R.groups[2].F == face({1, 2}));
  CHECK(R.groups[3].F == face({3, 4}));
}

TEST_CASE("radical comparison on the samples and the corpus") {
  auto R = radical_compare(fx::I1(), Q);
  CHECK(R.degrees_compared == 7);
  CHECK(R.dims_match);
  CHECK(R.gcm_I);
  CHECK(R.gcm_radical);
  CHECK_FALSE(R.cm_I);
  CHECK_FALSE(R.cm_radical);
  CHECK(R.gcm_implication_ok);
  CHECK(R.non_cm_implication_ok);

  std::mt19937_64 rng(813);
  CorpusParams p;
  for (int trial = 0; trial < 30; ++trial) {
    auto I = random_ideal(rng, p);
    REQUIRE_NOTHROW(radical_compare(I, Q));
    REQUIRE_NOTHROW(radical_compare(I, F2));
  }
}
