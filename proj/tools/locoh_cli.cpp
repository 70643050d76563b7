// Command-line driver: analyze ideals from .ideal files, check the
// combinatorial characterizations, run searches and self-comparisons.
// Exit codes: 0 ok, 1 internal inconsistency (a proved statement failed on
// data), 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locoh/analyzer.hpp"
#include "locoh/buchsbaum.hpp"
#include "locoh/cech.hpp"
#include "locoh/characterizations.hpp"
#include "locoh/construct.hpp"
#include "locoh/io.hpp"
#include "locoh/random_ideals.hpp"

using namespace locoh;

namespace {

IdealDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal(ss.str());
}

std::string mask_str(Mask F) {
  std::string s = "{";
  bool first = true;
  for (int j : mask_bits(F)) {
    if (!first) s += ',';
    s += std::to_string(j + 1);
    first = false;
  }
  return s + "}";
}

std::string vec_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(a[k]);
  }
  return s + ")";
}

std::string gens_str(const MonomialIdeal& I) {
  if (I.gens().empty()) return "0";
  std::string s;
  for (const auto& m : I.gens()) {
    if (!s.empty()) s += ", ";
    s += monomial_to_string(m);
  }
  return s;
}

struct Options {
  std::string field = "q";
  bool field_given = false;
  bool json = false;
  int parallel = 1;
  std::uint64_t seed = 0;

  FieldSpec resolve_field(const IdealDocument& doc) const {
    if (field_given) return FieldSpec::parse(field);
    if (doc.field) return *doc.field;
    return FieldSpec::parse(field);
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_table_text(const MonomialIdeal& I, const LocalCohomologyTable& T,
                      const InvariantsReport& R, const KBuchsbaumResult* k) {
  std::cout << "ideal: " << gens_str(I) << "  (n=" << T.n << ", field "
            << T.field.to_string() << ")\n";
  std::cout << "dim " << T.d << ", depth " << T.depth << ", reg " << T.reg << "\n";
  std::cout << "nonzero pieces (F lists the coordinates pinned at -1; each such row\n"
            << "stands for all degrees with those coordinates arbitrarily negative):\n";
  for (const auto& e : T.entries)
    std::cout << "  i=" << e.i << "  F=" << mask_str(e.F) << "  a=" << vec_str(e.a)
              << "  dim=" << e.dim << "\n";
  std::cout << "a-invariants:";
  for (const auto& x : T.a_inv) std::cout << " " << x.to_string();
  std::cout << "\nb-invariants:";
  for (const auto& x : T.b_inv) std::cout << " " << x.to_string();
  std::cout << "\nlengths:";
  for (long l : T.lengths) {
    if (l < 0)
      std::cout << " inf";
    else
      std::cout << " " << l;
  }
  std::cout << "\nfinite length per i:";
  for (char f : T.flc) std::cout << " " << (f ? "yes" : "no");
  std::cout << "\ngeneralized CM: " << (T.gcm ? "true" : "false")
            << ", CM: " << (T.cm ? "true" : "false") << "\n";
  if (k) {
    std::cout << "k-Buchsbaum index: ";
    switch (k->kind) {
      case KBuchsbaumResult::Kind::finite:
        std::cout << k->k;
        break;
      case KBuchsbaumResult::Kind::above_cap:
        std::cout << "above cap (> " << k->k << ")";
        break;
      case KBuchsbaumResult::Kind::infinite:
        std::cout << "infinite";
        break;
    }
    std::cout << "\n";
  }
  std::cout << "checks:";
  for (const auto& [name, ok] : R.checks) std::cout << " " << name << "=" << (ok ? "ok" : "FAIL");
  std::cout << "\n";
}

void cmd_analyze(const Options& opt, const std::string& path) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const LocalCohomologyTable T = local_cohomology_table(I, K, opt.parallel);
  const InvariantsReport R = invariants_report(T);
  const KBuchsbaumResult k = k_buchsbaum_index(I, K);
  if (opt.json)
    emit(json_report(I, T, R, &k));
  else
    print_table_text(I, T, R, &k);
}

void cmd_check_gcm(const Options& opt, const std::string& path) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const LocalCohomologyTable T = local_cohomology_table(I, K, opt.parallel);
  if (opt.json) {
    Json j;
    j["ideal"] = json_ideal(I);
    j["field"] = K.to_string();
    j["dim"] = T.d;
    j["depth"] = T.depth;
    j["gcm"] = T.gcm;
    j["cm"] = T.cm;
    emit(j);
  } else {
    std::cout << "generalized CM: " << (T.gcm ? "true" : "false") << " (dim " << T.d
              << ", depth " << T.depth << ", field " << K.to_string() << ")\n";
  }
}

void cmd_check_dim(const Options& opt, const std::string& path, int which) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const bool verdict = which == 2 ? check_dim2(I) : check_dim3(I);
  if (opt.json) {
    Json j;
    j["ideal"] = json_ideal(I);
    j["method"] = which == 2 ? "dim2" : "dim3";
    j["gcm"] = verdict;
    emit(j);
  } else {
    std::cout << "generalized CM (dim-" << which
              << " characterization): " << (verdict ? "true" : "false") << "\n";
  }
}

void cmd_hilbert(const Options& opt, const std::string& path) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const HilbertReport H = hilbert_series_report(I, K, opt.parallel);
  if (opt.json) {
    Json j;
    j["ideal"] = json_ideal(I);
    j["field"] = K.to_string();
    j["dim"] = H.d;
    Json groups = Json::array();
    for (const auto& g : H.groups) {
      Json jg;
      jg["i"] = g.i;
      jg["F"] = json_mask(g.F);
      Json terms = Json::array();
      for (const auto& t : g.terms) {
        Json jt;
        jt["a"] = t.a;
        jt["dim"] = t.dim;
        terms.push_back(jt);
      }
      jg["terms"] = terms;
      groups.push_back(jg);
    }
    j["groups"] = groups;
    emit(j);
  } else {
    std::cout << "Hilbert series of each H^i, field " << K.to_string() << ":\n";
    for (const auto& g : H.groups) {
      std::cout << "H^" << g.i << "  F=" << mask_str(g.F);
      if (g.F != 0)
        std::cout << "  (each term times a full geometric tail in the F directions)";
      std::cout << "\n";
      for (const auto& t : g.terms)
        std::cout << "  t^" << vec_str(t.a) << "  dim " << t.dim << "\n";
    }
    if (H.groups.empty()) std::cout << "  (zero)\n";
  }
}

void cmd_radical_compare(const Options& opt, const std::string& path) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const RadicalCompareReport R = radical_compare(I, K, opt.parallel);
  if (opt.json) {
    Json j;
    j["ideal"] = json_ideal(I);
    j["radical"] = json_ideal(radical(I));
    j["field"] = K.to_string();
    j["degrees_compared"] = R.degrees_compared;
    j["dims_match"] = R.dims_match;
    j["gcm"] = Json{{"ideal", R.gcm_I}, {"radical", R.gcm_radical}};
    j["cm"] = Json{{"ideal", R.cm_I}, {"radical", R.cm_radical}};
    emit(j);
  } else {
    std::cout << "radical: " << gens_str(radical(I)) << "\n";
    std::cout << "nonpositive-degree pieces match: " << (R.dims_match ? "yes" : "NO")
              << " (" << R.degrees_compared << " degrees)\n";
    std::cout << "generalized CM: ideal " << (R.gcm_I ? "true" : "false") << ", radical "
              << (R.gcm_radical ? "true" : "false") << "\n";
    std::cout << "CM: ideal " << (R.cm_I ? "true" : "false") << ", radical "
              << (R.cm_radical ? "true" : "false") << "\n";
  }
}

void cmd_frobenius(const Options& opt, const std::string& path,
                   const std::string& exps_str) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  std::vector<int> exps;
  std::stringstream ss(exps_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      exps.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("bad exponent list: " + exps_str);
    }
  }
  const MonomialIdeal img = frobenius_transform(I, exps);
  const LocalCohomologyTable T = local_cohomology_table(img, K, opt.parallel);
  const InvariantsReport R = invariants_report(T);
  const KBuchsbaumResult k = k_buchsbaum_index(img, K);
  if (opt.json) {
    Json j;
    j["source"] = json_ideal(I);
    j["exps"] = exps;
    j["image"] = json_report(img, T, R, &k);
    emit(j);
  } else {
    std::cout << "image: " << gens_str(img) << "\n";
    print_table_text(img, T, R, &k);
  }
}

void cmd_search(const Options& opt, const std::string& path, int bound, int tuples,
                int limit) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal J = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const auto entries = exponent_search(J, bound, tuples, DecisionPath::automatic, K);
  long gcm_count = 0;
  for (const auto& e : entries)
    if (e.gcm) ++gcm_count;
  if (opt.json) {
    Json j;
    j["seed"] = json_ideal(J);
    j["bound"] = bound;
    j["tuples"] = tuples;
    j["total"] = static_cast<long>(entries.size());
    j["gcm_count"] = gcm_count;
    Json sample = Json::array();
    long shown = 0;
    for (const auto& e : entries) {
      if (!e.gcm) continue;
      if (shown++ >= limit) break;
      sample.push_back(json_ideal(e.ideal));
    }
    j["gcm_sample"] = sample;
    emit(j);
  } else {
    std::cout << "assignments enumerated: " << entries.size() << "\n";
    std::cout << "generalized CM among them: " << gcm_count << "\n";
    long shown = 0;
    for (const auto& e : entries) {
      if (!e.gcm) continue;
      if (shown++ >= limit) break;
      std::cout << "  " << gens_str(e.ideal) << "\n";
    }
    if (gcm_count > shown) std::cout << "  ... (" << (gcm_count - shown) << " more)\n";
  }
}

void cmd_k_index(const Options& opt, const std::string& path, long cap) {
  const IdealDocument doc = load_document(path);
  const MonomialIdeal I = doc.ideal();
  const FieldSpec K = opt.resolve_field(doc);
  const KBuchsbaumResult k = k_buchsbaum_index(I, K, cap);
  long bound = 0;
  for (int r : I.rho()) bound += r;
  bound = bound - I.nvars() + 1;
  if (opt.json) {
    Json j;
    j["ideal"] = json_ideal(I);
    j["field"] = K.to_string();
    j["k_index"] = json_k_index(k);
    j["bound"] = bound;
    emit(j);
  } else {
    switch (k.kind) {
      case KBuchsbaumResult::Kind::finite:
        std::cout << "k-Buchsbaum index: " << k.k << " (proved bound " << bound << ")\n";
        break;
      case KBuchsbaumResult::Kind::above_cap:
        std::cout << "k-Buchsbaum index: above cap\n";
        break;
      case KBuchsbaumResult::Kind::infinite:
        std::cout << "k-Buchsbaum index: infinite (not generalized CM)\n";
        break;
    }
  }
}

// Degreewise agreement of the two computation routes on one ideal.
bool oracle_matches(const MonomialIdeal& I, const FieldSpec& K) {
  const auto reps = representative_degrees(I);
  const SimplicialComplex D = stanley_reisner_complex(radical(I));
  const int d = D.dimension() + 1;
  for (const auto& rep : reps) {
    const auto hom = reduced_homology(degree_complex(I, rep.degree()), K);
    const auto coh = cech_cohomology_dims(I, rep.degree(), K);
    for (int i = 0; i <= I.nvars(); ++i) {
      const long lhs = i <= d ? hom.at(i - card(rep.F) - 1) : 0;
      if (lhs != coh[i]) return false;
    }
  }
  return true;
}

void cmd_oracle_compare(const Options& opt, const std::string& target, int count) {
  std::vector<MonomialIdeal> ideals;
  if (target == "random") {
    std::mt19937_64 rng(opt.seed);
    CorpusParams params;
    ideals = corpus(rng, params, count);
  } else {
    ideals.push_back(load_document(target).ideal());
  }
  const FieldSpec K =
      opt.field_given ? FieldSpec::parse(opt.field) : FieldSpec::rationals();
  long ok = 0;
  for (const auto& I : ideals) {
    if (!oracle_matches(I, K))
      throw TheoremViolation("degreewise mismatch between the two routes");
    ++ok;
  }
  if (opt.json) {
    Json j;
    j["count"] = static_cast<long>(ideals.size());
    j["matches"] = ok;
    j["field"] = K.to_string();
    emit(j);
  } else {
    std::cout << ok << "/" << ideals.size() << " degreewise matches\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraded local cohomology of monomial quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  auto* field_opt =
      app.add_option("--field", opt.field, "coefficient field: q or gf:<p>")
          ->capture_default_str();
  app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_option("--parallel", opt.parallel, "worker threads")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for corpus commands")->capture_default_str();

  std::string path, exps_str, target;
  int bound = 2, tuples = 1, limit = 25, count = 50;
  long cap = -1;

  auto* analyze = app.add_subcommand("analyze", "full table, invariants, k-index");
  analyze->add_option("file", path, "ideal file")->required();

  auto* gcm = app.add_subcommand("check-gcm", "generalized CM verdict");
  gcm->add_option("file", path, "ideal file")->required();

  auto* d2 = app.add_subcommand("check-dim2", "dim-2 combinatorial characterization");
  d2->add_option("file", path, "ideal file")->required();

  auto* d3 = app.add_subcommand("check-dim3", "dim-3 combinatorial characterization");
  d3->add_option("file", path, "ideal file")->required();

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of each H^i");
  hil->add_option("file", path, "ideal file")->required();

  auto* rad = app.add_subcommand("radical-compare", "compare against the radical");
  rad->add_option("file", path, "ideal file")->required();

  auto* frob = app.add_subcommand("frobenius", "apply x_i -> x_i^(a_i) and analyze");
  frob->add_option("file", path, "ideal file")->required();
  frob->add_option("--exps", exps_str, "comma-separated exponents, one per variable")
      ->required();

  auto* search = app.add_subcommand("search", "enumerate assignments over a seed");
  search->add_option("file", path, "square-free seed ideal file")->required();
  search->add_option("--bound", bound, "max exponent")->required();
  search->add_option("--tuples", tuples, "max tuples per generator")
      ->capture_default_str();
  search->add_option("--limit", limit, "sample size to print")->capture_default_str();

  auto* kidx = app.add_subcommand("k-index", "strict k-Buchsbaum index");
  kidx->add_option("file", path, "ideal file")->required();
  kidx->add_option("--cap", cap, "search cap (default: proved bound + 2)");

  auto* oc = app.add_subcommand("oracle-compare",
                                "degreewise agreement of the two routes");
  oc->add_option("target", target, "ideal file, or `random`")->required();
  oc->add_option("--count", count, "random ideals to draw")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opt.field_given = field_opt->count() > 0;

  try {
    if (*analyze) cmd_analyze(opt, path);
    if (*gcm) cmd_check_gcm(opt, path);
    if (*d2) cmd_check_dim(opt, path, 2);
    if (*d3) cmd_check_dim(opt, path, 3);
    if (*hil) cmd_hilbert(opt, path);
    if (*rad) cmd_radical_compare(opt, path);
    if (*frob) cmd_frobenius(opt, path, exps_str);
    if (*search) cmd_search(opt, path, bound, tuples, limit);
    if (*kidx) cmd_k_index(opt, path, cap);
    if (*oc) cmd_oracle_compare(opt, target, count);
  } catch (const TheoremViolation& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
