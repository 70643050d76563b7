#pragma once

// Ideal file format, canonical printing, and the JSON report.
//
// File grammar (1-based variable indices, `#` starts a comment, blank lines
// are skipped):
//
//   ring n=<count>
//   name <free text>          optional
//   field q | gf:<p>          optional
//   gens
//   x1*x3
//   x1^2*x4
//
// or the compact form `gens: x1*x3, x1^2*x4, ...` on one line.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locoh/analyzer.hpp"
#include "locoh/buchsbaum.hpp"
#include "locoh/field.hpp"
#include "locoh/ideal.hpp"

namespace locoh {

struct IdealDocument {
  int n = 0;
  std::vector<Monomial> gens;  // as written, before minimalization
  std::optional<FieldSpec> field;
  std::string name;  // empty when absent

  MonomialIdeal ideal() const { return MonomialIdeal::from_generators(n, gens); }
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses one factor `x<idx>` or `x<idx>^<exp>`; col points at its first char.
inline std::pair<int, int> parse_factor(const std::string& f, int n, int line, int col) {
  if (f.empty()) throw ParseError("empty factor", line, col);
  if (f[0] != 'x' && f[0] != 'X') throw ParseError("factor must start with x", line, col);
  std::size_t i = 1;
  std::size_t idx_begin = i;
  while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i]))) ++i;
  if (i == idx_begin) throw ParseError("missing variable index", line, col + 1);
  long idx = 0;
  for (std::size_t k = idx_begin; k < i; ++k) {
    idx = idx * 10 + (f[k] - '0');
    if (idx > 1000000) throw IndexOutOfRange("variable index out of range", line, col + 1);
  }
  if (idx < 1 || idx > n)
    throw IndexOutOfRange("variable index " + std::to_string(idx) + " out of range 1.." +
                              std::to_string(n),
                          line, col + 1);
  long exp = 1;
  if (i < f.size()) {
    if (f[i] != '^')
      throw ParseError("unexpected character in factor", line, col + static_cast<int>(i));
    const int exp_col = col + static_cast<int>(i) + 1;
    ++i;
    std::size_t exp_begin = i;
    while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i]))) ++i;
    if (i == exp_begin || i != f.size()) throw ParseError("bad exponent", line, exp_col);
    exp = 0;
    for (std::size_t k = exp_begin; k < i; ++k) {
      exp = exp * 10 + (f[k] - '0');
      if (exp > 1000000) throw ParseError("exponent too large", line, exp_col);
    }
    if (exp == 0) throw ZeroExponent("exponent must be at least 1", line, exp_col);
  }
  return {static_cast<int>(idx - 1), static_cast<int>(exp)};
}

inline Monomial parse_monomial(const std::string& text, int n, int line, int col0) {
  std::vector<std::pair<int, int>> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    const std::string piece = text.substr(pos, star == std::string::npos ? star : star - pos);
    // locate the factor inside its piece for a precise column
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    const int col = col0 + static_cast<int>(pos + lead);
    const std::string f = trim(piece);
    if (f.empty()) throw ParseError("empty factor", line, col);
    factors.push_back(parse_factor(f, n, line, col));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  std::vector<int> e(n, 0);
  for (auto [j, exp] : factors) e[j] += exp;
  return Monomial(e);
}

}  // namespace detail

inline IdealDocument parse_ideal(const std::string& text) {
  IdealDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  enum class State { expect_ring, expect_gens, in_gens, done };
  State st = State::expect_ring;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (detail::blank_or_comment(raw)) continue;
    const std::string line = detail::trim(raw);
    const int col0 = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

    // name and field lines are accepted anywhere before the generators
    if (st == State::expect_ring || st == State::expect_gens) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw == "name") {
        std::string rest;
        std::getline(ls, rest);
        doc.name = detail::trim(rest);
        if (doc.name.empty()) throw ParseError("empty name", lineno, col0);
        continue;
      }
      if (kw == "field") {
        std::string rest;
        std::getline(ls, rest);
        try {
          doc.field = FieldSpec::parse(detail::trim(rest));
        } catch (const BadField& e) {
          throw ParseError(e.what(), lineno, col0);
        }
        continue;
      }
    }

    switch (st) {
      case State::expect_ring: {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "ring") throw ParseError("expected `ring n=<count>`", lineno, col0);
        std::string rest;
        std::getline(ls, rest);
        rest = detail::trim(rest);
        if (rest.rfind("n=", 0) != 0 ||
            rest.substr(2).find_first_not_of("0123456789") != std::string::npos ||
            rest.size() == 2)
          throw ParseError("expected `n=<count>` after ring", lineno, col0);
        const long n = std::stol(rest.substr(2));
        if (n < 1 || n > kMaxVars)
          throw ParseError("variable count must be in 1.." + std::to_string(kMaxVars),
                           lineno, col0);
        doc.n = static_cast<int>(n);
        st = State::expect_gens;
        break;
      }
      case State::expect_gens: {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "gens") {
          std::string rest;
          std::getline(ls, rest);
          rest = detail::trim(rest);
          if (rest.empty()) {
            st = State::in_gens;
            break;
          }
          throw ParseError("unexpected text after gens (use `gens:` for one-line form)",
                           lineno, col0);
        }
        if (kw.rfind("gens:", 0) == 0 || kw == "gens:") {
          const std::size_t colon = raw.find(':');
          std::string rest = raw.substr(colon + 1);
          // split on commas; empty list is allowed and means the zero ideal
          std::size_t pos = 0;
          if (!detail::trim(rest).empty()) {
            while (true) {
              std::size_t comma = rest.find(',', pos);
              const std::string piece =
                  rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
              std::size_t lead = 0;
              while (lead < piece.size() &&
                     std::isspace(static_cast<unsigned char>(piece[lead])))
                ++lead;
              const int col = static_cast<int>(colon + 1 + pos + lead) + 1;
              if (detail::trim(piece).empty())
                throw ParseError("empty monomial in list", lineno, col);
              doc.gens.push_back(
                  detail::parse_monomial(detail::trim(piece), doc.n, lineno, col));
              if (comma == std::string::npos) break;
              pos = comma + 1;
            }
          }
          st = State::done;
          break;
        }
        throw ParseError("expected `gens`, `name`, or `field`", lineno, col0);
      }
      case State::in_gens:
        doc.gens.push_back(detail::parse_monomial(line, doc.n, lineno, col0));
        break;
      case State::done:
        throw ParseError("trailing content after one-line gens", lineno, col0);
    }
  }

  if (st == State::expect_ring) throw ParseError("empty input, expected ring header", 1, 1);
  if (st == State::expect_gens) throw ParseError("missing gens section", lineno + 1, 1);
  return doc;
}

inline std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (int j = 0; j < m.nvars(); ++j) {
    const int e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// Lowercase input form, the inverse of FieldSpec::parse.
inline std::string field_input_form(const FieldSpec& K) {
  return K.kind == FieldSpec::Kind::rationals ? "q" : "gf:" + std::to_string(K.p);
}

inline std::string print_ideal(const IdealDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "name " + doc.name + "\n";
  out += "ring n=" + std::to_string(doc.n) + "\n";
  if (doc.field) out += "field " + field_input_form(*doc.field) + "\n";
  out += "gens\n";
  for (const auto& m : doc.gens) out += monomial_to_string(m) + "\n";
  return out;
}

inline IdealDocument document_for(const MonomialIdeal& I, const std::string& name = "") {
  IdealDocument doc;
  doc.n = I.nvars();
  doc.gens = I.gens();
  doc.name = name;
  return doc;
}

// ---- JSON reports ----
//
// Key order is fixed by construction (ordered_json), so a report is
// byte-identical across runs and thread counts.

using Json = nlohmann::ordered_json;

inline Json json_mask(Mask F) {
  Json arr = Json::array();
  for (int j : mask_bits(F)) arr.push_back(j + 1);
  return arr;
}

inline Json json_ext(const ExtInt& x) {
  if (x.finite()) return x.v;
  return x.to_string();
}

inline Json json_ideal(const MonomialIdeal& I) {
  Json j;
  j["n"] = I.nvars();
  Json gens = Json::array();
  for (const auto& m : I.gens()) gens.push_back(monomial_to_string(m));
  j["gens"] = gens;
  return j;
}

inline Json json_k_index(const KBuchsbaumResult& k) {
  switch (k.kind) {
    case KBuchsbaumResult::Kind::finite:
      return k.k;
    case KBuchsbaumResult::Kind::above_cap:
      return "above_cap";
    case KBuchsbaumResult::Kind::infinite:
      return "infinite";
  }
  return "infinite";
}

// The full analyze report.  Pass k as nullptr when the index was not computed.
inline Json json_report(const MonomialIdeal& I, const LocalCohomologyTable& T,
                        const InvariantsReport& R, const KBuchsbaumResult* k) {
  Json j;
  j["ideal"] = json_ideal(I);
  j["field"] = T.field.to_string();
  j["dim"] = T.d;
  j["depth"] = T.depth;

  Json table = Json::array();
  for (const auto& e : T.entries) {
    Json row;
    row["i"] = e.i;
    row["F"] = json_mask(e.F);
    row["box"] = e.a;
    row["dim"] = e.dim;
    table.push_back(row);
  }
  j["table"] = table;

  Json a = Json::array(), b = Json::array();
  for (const auto& x : T.a_inv) a.push_back(json_ext(x));
  for (const auto& x : T.b_inv) b.push_back(json_ext(x));
  j["a"] = a;
  j["b"] = b;
  j["reg"] = T.reg;

  Json flc = Json::array();
  for (char f : T.flc) flc.push_back(static_cast<bool>(f));
  j["flc"] = flc;
  j["gcm"] = T.gcm;
  j["cm"] = T.cm;
  j["k_index"] = k ? json_k_index(*k) : Json(nullptr);

  Json checks;
  for (const auto& [name, ok] : R.checks) checks[name] = ok;
  j["checks"] = checks;
  return j;
}

}  // namespace locoh
