#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "locoh/analyzer.hpp"
#include "locoh/buchsbaum.hpp"
#include "locoh/io.hpp"
#include "locoh/random_ideals.hpp"

using namespace locoh;

TEST_CASE("multiline and compact forms parse the same") {
  auto a = parse_ideal("ring n=3\ngens\nx1*x2\nx2^2*x3\n");
  auto b = parse_ideal("ring n=3\ngens: x1*x2, x2^2*x3\n");
  CHECK(a.n == 3);
  CHECK(a.gens == b.gens);
  CHECK(a.ideal() == b.ideal());
  CHECK(a.name.empty());
  CHECK_FALSE(a.field.has_value());
}

TEST_CASE("header lines in any order before gens") {
  auto doc = parse_ideal("# comment\nname demo\nring n=2\nfield gf:7\ngens\nx1*x2\n");
  CHECK(doc.name == "demo");
  REQUIRE(doc.field.has_value());
  CHECK(*doc.field == FieldSpec::prime(7));

  auto doc2 = parse_ideal("ring n=2\nname demo2\ngens: x1\n");
  CHECK(doc2.name == "demo2");

  // Zero ideal: gens section with no entries, or empty compact list.
  CHECK(parse_ideal("ring n=2\ngens\n").gens.empty());
  CHECK(parse_ideal("ring n=2\ngens:\n").gens.empty());
}

TEST_CASE("factors accumulate and whitespace is forgiven") {
  auto doc = parse_ideal("ring n=4\ngens\n  x1 * x1 * x3^2  \n");
  REQUIRE(doc.gens.size() == 1);
  CHECK(doc.gens[0] == Monomial::from_pairs(4, {{0, 2}, {2, 2}}));
}

TEST_CASE("parse errors carry positions") {
  auto expect_parse_error = [](const std::string& text, int line, int col) {
    try {
      parse_ideal(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == col);
    }
  };

  expect_parse_error("gens\nx1\n", 1, 1);            // missing ring header
  expect_parse_error("ring n=\ngens\n", 1, 1);       // bad count
  expect_parse_error("ring n=2\nbogus\n", 2, 1);     // not a section
  expect_parse_error("ring n=2\ngens\ny1\n", 3, 1);  // bad factor start
  expect_parse_error("ring n=2\ngens x1\n", 2, 1);   // junk after gens
  expect_parse_error("ring n=2\ngens: x1,,x2\n", 2, 10);  // empty list item
  expect_parse_error("ring n=2\ngens: x1\nx2\n", 3, 1);   // trailing content
  expect_parse_error("", 1, 1);
  expect_parse_error("ring n=2\n", 2, 1);  // missing gens section
  expect_parse_error("ring n=0\ngens\n", 1, 1);

  try {
    parse_ideal("ring n=2\ngens\nx0\n");
    FAIL("expected IndexOutOfRange");
  } catch (const IndexOutOfRange& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 2);
  }
  CHECK_THROWS_AS(parse_ideal("ring n=2\ngens\nx3\n"), IndexOutOfRange);

  try {
    parse_ideal("ring n=2\ngens\nx1^0\n");
    FAIL("expected ZeroExponent");
  } catch (const ZeroExponent& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 4);
  }

  // Field validation surfaces as a positioned error too.
  try {
    parse_ideal("ring n=2\nfield gf:4\ngens\n");
    FAIL("expected ParseError");
  } catch (const ZeroExponent&) {
    FAIL("wrong error class");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_ideal("ring n=2\nfield narf\ngens\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring n=2\nname\ngens\n"), ParseError);
}

TEST_CASE("print and reparse round trip") {
  IdealDocument doc;
  doc.n = 4;
  doc.name = "demo";
  doc.field = FieldSpec::prime(32003);
  doc.gens = fx::I1().gens();
  auto again = parse_ideal(print_ideal(doc));
  CHECK(again.n == doc.n);
  CHECK(again.name == doc.name);
  CHECK(again.field == doc.field);
  CHECK(again.gens == doc.gens);

  std::mt19937_64 rng(2024);
  CorpusParams p;
  for (int trial = 0; trial < 50; ++trial) {
    auto I = random_ideal(rng, p);
    auto round = parse_ideal(print_ideal(document_for(I))).ideal();
    CHECK(round == I);
  }
}

TEST_CASE("monomial_to_string forms") {
  CHECK(monomial_to_string(Monomial::from_pairs(3, {{0, 1}})) == "x1");
  CHECK(monomial_to_string(Monomial::from_pairs(3, {{0, 2}, {2, 1}})) == "x1^2*x3");
  CHECK(monomial_to_string(Monomial(std::vector<int>{0, 0, 0})) == "1");
}

TEST_CASE("field input forms round trip") {
  for (const auto& K : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(32003)})
    CHECK(FieldSpec::parse(field_input_form(K)) == K);
  CHECK(FieldSpec::rationals().to_string() == "Q");
  CHECK(FieldSpec::prime(5).to_string() == "GF(5)");
  CHECK_THROWS_AS(FieldSpec::parse("gf:"), BadField);
  CHECK_THROWS_AS(FieldSpec::parse("gf:15"), BadField);
  CHECK_THROWS_AS(FieldSpec::parse("r"), BadField);
}

TEST_CASE("json report shape and determinism") {
  auto I = fx::I1();
  const auto K = FieldSpec::rationals();
  auto T = local_cohomology_table(I, K);
  auto R = invariants_report(T);
  auto k = k_buchsbaum_index(I, K);
  auto j = json_report(I, T, R, &k);

  CHECK(j["ideal"]["n"] == 4);
  CHECK(j["ideal"]["gens"].size() == 6);
  CHECK(j["field"] == "Q");
  CHECK(j["dim"] == 2);
  CHECK(j["depth"] == 0);
  REQUIRE(j["table"].size() == 5);
  CHECK(j["table"][0]["i"] == 0);
  CHECK(j["table"][0]["F"] == Json::array());
  CHECK(j["table"][0]["box"] == Json::array({0, 1, 1, 0}));
  CHECK(j["table"][0]["dim"] == 1);
  CHECK(j["table"][3]["F"] == Json::array({1, 2}));
  CHECK(j["table"][3]["box"] == Json::array({-1, -1, 0, 0}));
  CHECK(j["a"] == Json::array({2, 0, -2}));
  CHECK(j["b"][2] == "-inf");
  CHECK(j["reg"] == 2);
  CHECK(j["flc"] == Json::array({true, true, false}));
  CHECK(j["gcm"] == true);
  CHECK(j["cm"] == false);
  CHECK(j["k_index"] == 1);
  CHECK(j["checks"].size() == 3);

  // Key order is part of the contract.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"ideal", "field", "dim", "depth", "table", "a", "b",
                                         "reg", "flc", "gcm", "cm", "k_index", "checks"});

  // Byte determinism across thread counts.
  auto T4 = local_cohomology_table(I, K, 4);
  auto j4 = json_report(I, T4, invariants_report(T4), &k);
  CHECK(j.dump(2) == j4.dump(2));

  // Null k when the index was not requested.
  auto jn = json_report(I, T, R, nullptr);
  CHECK(jn["k_index"].is_null());

  // Extended values and the infinite kind.
  KBuchsbaumResult inf;
  inf.kind = KBuchsbaumResult::Kind::infinite;
  CHECK(json_k_index(inf) == "infinite");
  KBuchsbaumResult above;
  above.kind = KBuchsbaumResult::Kind::above_cap;
  above.k = 9;
  CHECK(json_k_index(above) == "above_cap");
  CHECK(json_ext(ExtInt::pos_inf()) == "+inf");
  CHECK(json_ext(ExtInt::of(-3)) == -3);
}
