#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "spinwreath/error.hpp"
#include "spinwreath/qtable.hpp"
#include "spinwreath/relations.hpp"
#include "spinwreath/spin_group.hpp"

namespace spinwreath::cli {
namespace {

struct Document {
  Json json;
  std::string csv;
  std::string pretty;
};

// Raised when a verification finds a mismatch; carries the document to emit.
struct VerificationFailed {
  Document doc;
};

struct RunConfig {
  std::string gamma_spec = "trivial";
  int n = 3;
  std::string xi_spec;  // empty: the command's default form
  std::vector<long> pi;
  int degree = 6;
  int window = 2;
  int max_index = 9;
  unsigned seed = 1;
  int trials = 20;
  std::string index_set = "both";
  std::vector<long> alpha, beta;
  std::string format = "json";
  std::string output;
  bool check = false;
  bool oracle = false;
};

// Verbosity comes from SPINWREATH_LOG (quiet, info or debug).
int log_level() {
  const char* v = std::getenv("SPINWREATH_LOG");
  if (!v) return 0;
  const std::string s(v);
  return s == "debug" ? 2 : s == "info" ? 1 : 0;
}

class Stage {
 public:
  Stage(std::ostream& err, std::string name) : err_(err), name_(std::move(name)) {}
  ~Stage() {
    if (log_level() < 1) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    err_ << "[spinwreath] " << name_ << " took " << s << " s\n";
  }

 private:
  std::ostream& err_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

GammaData load_group(const std::string& spec) {
  if (auto g = builtin_by_name(spec)) return *g;
  std::ifstream in(spec);
  if (!in) throw InputError("'" + spec + "' is neither a built-in group nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_gamma(ss.str());
}

std::optional<std::vector<long>> pi_of(const RunConfig& cfg) {
  if (cfg.pi.empty()) return std::nullopt;
  return cfg.pi;
}

VirtualChar resolve_xi(const GammaData& G, const RunConfig& cfg, const std::string& fallback) {
  const std::string spec = cfg.xi_spec.empty() ? fallback : cfg.xi_spec;
  VirtualChar xi;
  if (spec == "standard") {
    xi = trivial_xi(G);
  } else if (spec == "mckay") {
    xi = mckay_xi(G, pi_of(cfg));
  } else {
    std::string body = spec;
    if (body.front() != '[') body = "[" + body + "]";
    try {
      xi.coeffs = Json::parse(body).get<std::vector<long>>();
    } catch (const std::exception&) {
      throw InputError("xi must be 'standard', 'mckay' or a list of integers, got '" + spec + "'");
    }
    if (static_cast<int>(xi.coeffs.size()) != G.num_chars())
      throw InputError("xi needs " + std::to_string(G.num_chars()) + " coefficients");
  }
  if (!xi.self_dual(G)) throw InputError("xi is not self-dual");
  return xi;
}

std::vector<std::string> class_names(const GammaData& G) {
  std::vector<std::string> out;
  for (const auto& c : G.classes) out.push_back(c.name);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string integer_string(const Integer& z) { return z.get_str(); }

// ---- classes ----

Json type_json(const SignedType& t, const std::vector<std::string>& names) {
  return Json{{"rho_plus", multipartition_to_json(t.rho_plus, names)},
              {"rho_minus", multipartition_to_json(t.rho_minus, names)}};
}

// Brute-force classes against the split classification and centralizer formula.
Json oracle_classes(const GammaData& G, int n, const OracleResult& res, bool& ok) {
  const auto names = class_names(G);
  std::map<SignedType, std::vector<const OracleClass*>> by_type;
  for (const auto& oc : res.classes) by_type[oc.type].push_back(&oc);
  Json mismatches = Json::array();
  auto report = [&](const SignedType& t, const std::string& what) {
    Json m = type_json(t, names);
    m["mismatch"] = what;
    mismatches.push_back(m);
  };
  if (Integer(res.group_order) != cover_order(G, n)) mismatches.push_back(Json{{"mismatch", "group order"}});
  for (const auto& t : all_signed_types(G, n)) {
    const auto& found = by_type[t];
    const size_t want = is_split(t) ? 2 : 1;
    if (found.size() != want) report(t, "class count " + std::to_string(found.size()));
    for (const OracleClass* oc : found) {
      if (oc->split != is_split(t)) report(t, "split flag");
      if (Integer(oc->centralizer) != centralizer_order(G, t)) report(t, "centralizer " + std::to_string(oc->centralizer));
    }
  }
  ok = mismatches.empty();
  return Json{{"group_order", res.group_order},
              {"classes", res.classes.size()},
              {"mismatches", mismatches},
              {"status", ok ? "OK" : "MISMATCH"}};
}

// Traces on the basic spin modules against the closed character formula.
Json oracle_traces(const GammaData& G, int n, const OracleResult& res, bool& ok) {
  const auto names = class_names(G);
  ClassFunSpace S(G);
  Json mismatches = Json::array();
  long compared = 0;
  for (int V = 0; V < G.num_chars(); ++V) {
    const SpinClassFun f = S.basic_char_closed(n, G.chars[static_cast<size_t>(V)]);
    for (const auto& oc : res.classes) {
      const CycScalar tr = basic_spin_trace(G, V, oc.representative);
      ++compared;
      const bool carries = oc.split && type_parity(oc.type) == 0;
      const CycScalar want = carries ? f.at(oc.type.rho_plus) : CycScalar(0);
      if (tr != want && tr != -want) {
        Json m = type_json(oc.type, names);
        m["character"] = G.char_names[static_cast<size_t>(V)];
        m["trace"] = cyc_to_json(tr);
        m["expected"] = cyc_to_json(want);
        mismatches.push_back(m);
      }
    }
    // D+ holds the representative without a-factors and k = 0, D- its z-multiple
    for (const auto& rho : S.classes(n)) {
      const SignedType t{rho, MultiPartition(static_cast<size_t>(G.num_classes()))};
      const SpinElement plus = type_representative(G, t);
      const CycScalar want = f.at(rho);
      ++compared;
      if (basic_spin_trace(G, V, plus) != want ||
          basic_spin_trace(G, V, multiply(*G.concrete, spin_z(n), plus)) != -want) {
        Json m = type_json(t, names);
        m["character"] = G.char_names[static_cast<size_t>(V)];
        m["expected"] = cyc_to_json(want);
        mismatches.push_back(m);
      }
    }
  }
  ok = mismatches.empty();
  return Json{{"compared", compared}, {"mismatches", mismatches}, {"status", ok ? "OK" : "MISMATCH"}};
}

Document cmd_classes(const RunConfig& cfg, std::ostream& err) {
  const GammaData G = load_group(cfg.gamma_spec);
  const auto names = class_names(G);
  Json types = Json::array();
  std::ostringstream csv, pretty;
  csv << "rho_plus,rho_minus,parity,split,classes,centralizer\n";
  int even_pairs = 0, odd_pairs = 0;
  long num_classes = 0;
  for (const auto& t : all_signed_types(G, cfg.n)) {
    const bool split = is_split(t);
    const bool even = type_parity(t) == 0;
    const Integer c = centralizer_order(G, t);
    if (split) (even ? even_pairs : odd_pairs) += 1;
    num_classes += split ? 2 : 1;
    Json e = type_json(t, names);
    e["parity"] = even ? "even" : "odd";
    e["split"] = split;
    e["classes"] = split ? 2 : 1;
    e["centralizer"] = integer_to_json(c);
    types.push_back(e);
    csv << csv_field(e["rho_plus"].dump()) << ',' << csv_field(e["rho_minus"].dump()) << ','
        << (even ? "even" : "odd") << ',' << (split ? "true" : "false") << ',' << (split ? 2 : 1) << ','
        << integer_string(c) << '\n';
    pretty << "  +" << to_string(t.rho_plus) << "  -" << to_string(t.rho_minus) << "  " << (even ? "even" : "odd")
           << (split ? "  split" : "") << "  |C| = " << integer_string(c) << '\n';
  }
  Json doc{{"command", "classes"},
           {"gamma", G.name},
           {"n", cfg.n},
           {"group_order", integer_to_json(cover_order(G, cfg.n))},
           {"types", types},
           {"summary",
            {{"types", types.size()},
             {"classes", num_classes},
             {"even_split_pairs", even_pairs},
             {"odd_split_pairs", odd_pairs}}}};
  bool ok = true;
  if (cfg.oracle) {
    if (!G.concrete) throw InputError("the oracle needs a group with a multiplication table");
    Stage s(err, "brute-force classes");
    doc["oracle"] = oracle_classes(G, cfg.n, enumerate_classes_bruteforce(G, cfg.n), ok);
  }
  doc["status"] = ok ? "OK" : "MISMATCH";
  std::ostringstream head;
  head << G.name << ", n = " << cfg.n << ": " << types.size() << " types, " << num_classes << " classes, "
       << even_pairs << " even split pairs, " << odd_pairs << " odd split pairs\n";
  if (cfg.oracle) head << "oracle: " << doc["oracle"]["status"].get<std::string>() << '\n';
  Document d{doc, csv.str(), head.str() + pretty.str() + "status: " + doc["status"].get<std::string>() + "\n"};
  if (!ok) throw VerificationFailed{d};
  return d;
}

// ---- chartable ----

Document cmd_chartable(const RunConfig& cfg, std::ostream& err) {
  const GammaData G = load_group(cfg.gamma_spec);
  if (!cfg.xi_spec.empty() && cfg.xi_spec != "standard")
    throw InputError("character tables are built for the standard form only");
  QFunctions Q(G);
  CharTable t;
  {
    Stage s(err, "character table");
    try {
      t = Q.build_table(cfg.n, cfg.check);
    } catch (const CheckFailure& e) {
      const Json doc{{"command", "chartable"}, {"gamma", G.name}, {"n", cfg.n}, {"status", "fail"}, {"error", e.what()}};
      throw VerificationFailed{{doc, std::string("error\n") + csv_field(e.what()) + "\n", std::string(e.what()) + "\n"}};
    }
  }
  Json doc = table_to_json(t, G);
  if (cfg.check) doc["check"] = "pass";
  std::ostringstream pretty;
  pretty << G.name << ", n = " << cfg.n << ": " << t.rows.size() << " x " << t.columns.size() << '\n';
  pretty << "columns:";
  for (const auto& c : t.columns) pretty << "  " << to_string(c);
  pretty << '\n';
  for (const auto& r : t.rows) {
    pretty << to_string(r.lambda) << " [" << (r.type == ModuleType::M ? 'M' : 'Q') << "]:";
    for (const auto& v : r.values) pretty << "  " << v.to_string();
    pretty << '\n';
  }
  if (cfg.check) pretty << "checks: pass\n";
  return {doc, table_to_csv(t, G), pretty.str()};
}

// ---- verify ----

Json bounds_json(const RunConfig& cfg, const std::string& suite) {
  if (suite == "heisenberg") return {{"degree", cfg.degree}, {"max_index", cfg.max_index}};
  if (suite == "isometry") return {{"n", cfg.n}};
  if (suite == "hopf") return {{"n", cfg.n}, {"seed", cfg.seed}, {"trials", cfg.trials}};
  if (suite == "oracle") return {{"n", cfg.n}};
  Json b{{"degree", cfg.degree}, {"window", cfg.window}};
  if (suite == "affine") b["index_set"] = cfg.index_set;
  return b;
}

LatticeVec unit(int r, int i, long s) {
  LatticeVec v(static_cast<size_t>(r), 0);
  v[static_cast<size_t>(i)] = s;
  return v;
}

std::vector<CheckReport> run_suite(const std::string& suite, const GammaData& G, const VirtualChar& xi,
                                   const RunConfig& cfg) {
  const CheckOptions opt{cfg.degree, cfg.window, Exec::Parallel};
  if (suite == "heisenberg") return {check_heisenberg(FockSpace(G, xi), cfg.degree, cfg.max_index)};
  if (suite == "isometry") return {check_isometry(ClassFunSpace(G), xi, cfg.n)};
  if (suite == "hopf") return {check_hopf(ClassFunSpace(G), cfg.n, cfg.seed, cfg.trials)};
  const TwistedSpace T(G, xi);
  if (suite == "clifford") return check_clifford(T, opt);
  if (suite == "affine") {
    std::vector<int> first;
    if (cfg.index_set != "affine") first.push_back(0);
    if (cfg.index_set != "toroidal") first.push_back(1);
    return check_affine(T, first, opt);
  }
  // ope
  std::vector<CheckReport> out{check_x_parity(T, opt), check_prim_commutator(T, opt)};
  const int r = G.num_chars();
  if (!cfg.alpha.empty() || !cfg.beta.empty()) {
    if (static_cast<int>(cfg.alpha.size()) != r || static_cast<int>(cfg.beta.size()) != r)
      throw InputError("--alpha and --beta need " + std::to_string(r) + " entries each");
    out.push_back(check_ope(T, cfg.alpha, cfg.beta, opt));
    return out;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      for (long s : {1L, -1L}) out.push_back(check_ope(T, unit(r, i, 1), unit(r, j, s), opt));
  return out;
}

Document cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& err) {
  const GammaData G = load_group(cfg.gamma_spec);
  Json doc{{"command", "verify"}, {"suite", suite}, {"gamma", G.name}};
  std::vector<CheckReport> reports;
  bool ok = true;
  if (suite == "oracle") {
    if (!G.concrete) throw InputError("the oracle needs a group with a multiplication table");
    doc["bounds"] = bounds_json(cfg, suite);
    Stage s(err, "oracle");
    const OracleResult res = enumerate_classes_bruteforce(G, cfg.n);
    bool c_ok = true, t_ok = true;
    doc["classes"] = oracle_classes(G, cfg.n, res, c_ok);
    doc["traces"] = oracle_traces(G, cfg.n, res, t_ok);
    ok = c_ok && t_ok;
  } else {
    const VirtualChar xi = resolve_xi(G, cfg, suite == "affine" ? "mckay" : "standard");
    if (suite == "clifford" && xi.coeffs != trivial_xi(G).coeffs)
      throw InputError("the Clifford relations are stated for the standard form");
    if (suite == "affine" && xi.coeffs != mckay_xi(G, pi_of(cfg)).coeffs)
      throw InputError("the affine presentation is stated for the McKay form");
    doc["xi"] = xi.coeffs;
    doc["bounds"] = bounds_json(cfg, suite);
    Stage s(err, "verify " + suite);
    reports = run_suite(suite, G, xi, cfg);
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(r.to_json());
      ok = ok && r.passed;
    }
    doc["reports"] = arr;
  }
  doc["status"] = ok ? "pass" : "fail";

  std::ostringstream csv, pretty;
  csv << "relation,params,status,cases\n";
  pretty << "verify " << suite << " on " << G.name << '\n';
  for (const auto& r : reports) {
    csv << csv_field(r.relation) << ',' << csv_field(r.params.dump()) << ',' << (r.passed ? "pass" : "fail") << ','
        << r.cases << '\n';
    pretty << "  " << (r.passed ? "pass" : "FAIL") << "  " << r.relation << "  " << r.params.dump() << "  ("
           << r.cases << " cases)\n";
    if (r.witness) pretty << "    witness: " << r.witness->dump() << '\n';
  }
  if (suite == "oracle") {
    for (const char* part : {"classes", "traces"}) {
      csv << part << ",{}," << (doc[part]["status"] == "OK" ? "pass" : "fail") << ','
          << doc[part]["mismatches"].size() << '\n';
      pretty << "  " << part << ": " << doc[part]["status"].get<std::string>() << '\n';
    }
  }
  pretty << "status: " << doc["status"].get<std::string>() << '\n';
  Document d{doc, csv.str(), pretty.str()};
  if (!ok) throw VerificationFailed{d};
  return d;
}

// ---- mckay ----

Document cmd_mckay(const RunConfig& cfg, std::ostream&) {
  const GammaData G = load_group(cfg.gamma_spec);
  const VirtualChar xi = mckay_xi(G, pi_of(cfg));
  const auto A = cartan_matrix(G, xi);
  const auto type = identify_affine_type(A);
  Json doc{{"command", "mckay"}, {"gamma", G.name}, {"xi", xi.coeffs}, {"characters", G.char_names}, {"cartan", A}};
  doc["affine_type"] = type ? Json(*type) : Json(nullptr);
  doc["status"] = type ? "OK" : "UNRECOGNIZED";
  std::ostringstream csv, pretty;
  csv << "character";
  for (const auto& nm : G.char_names) csv << ',' << csv_field(nm);
  csv << '\n';
  for (size_t i = 0; i < A.size(); ++i) {
    csv << csv_field(G.char_names[i]);
    for (long v : A[i]) csv << ',' << v;
    csv << '\n';
  }
  pretty << G.name << ": affine type " << (type ? *type : std::string("unrecognized")) << '\n';
  for (const auto& row : A) {
    for (long v : row) pretty << (v < 0 ? " " : "  ") << v;
    pretty << '\n';
  }
  Document d{doc, csv.str(), pretty.str()};
  if (!type) throw VerificationFailed{d};
  return d;
}

void emit(const RunConfig& cfg, const Document& d, std::ostream& out) {
  std::string body;
  if (cfg.format == "csv") {
    body = d.csv;
  } else if (cfg.format == "pretty") {
    body = d.pretty;
  } else {
    body = d.json.dump(2) + "\n";
  }
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw InputError("cannot write " + cfg.output);
  f << body;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string suite;
  CLI::App app{"Spin characters of wreath products and their vertex operator realization", "spinwreath"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option defaults; flags on the command line take precedence");

  app.add_option("--gamma", cfg.gamma_spec, "Built-in group (trivial, cyclic:k, klein4, quaternion8) or group file")
      ->capture_default_str();
  app.add_option("--n", cfg.n, "Degree n of the wreath product")->check(CLI::Range(0, 12))->capture_default_str();
  app.add_option("--xi", cfg.xi_spec, "Form: standard, mckay, or integer coefficients such as [2,-1,-1]");
  app.add_option("--pi", cfg.pi, "Coefficients of the 2-dimensional representation for the McKay form")
      ->delimiter(',');
  app.add_option("--degree", cfg.degree, "Largest basis degree for operator checks")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  app.add_option("--window", cfg.window, "Mode window |m| <= window")->check(CLI::Range(0, 8))->capture_default_str();
  app.add_option("--max-index", cfg.max_index, "Largest odd mode for the Heisenberg check")
      ->check(CLI::Range(1, 31))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random Hopf inputs")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random Hopf trials")->check(CLI::Range(1, 1000))->capture_default_str();
  app.add_option("--index-set", cfg.index_set, "Affine check: toroidal, affine or both")
      ->check(CLI::IsMember({"toroidal", "affine", "both"}))
      ->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "Lattice vector for the OPE check")->delimiter(',');
  app.add_option("--beta", cfg.beta, "Lattice vector for the OPE check")->delimiter(',');
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--output,-o", cfg.output, "Write the document to this file");
  app.add_flag("--check", cfg.check, "Run the table checks");
  app.add_flag("--oracle", cfg.oracle, "Compare with brute-force enumeration");

  auto* classes = app.add_subcommand("classes", "Conjugacy class types, split classification and centralizers");
  auto* chartable = app.add_subcommand("chartable", "Spin character table");
  auto* verify = app.add_subcommand("verify", "Check a family of identities");
  verify->add_option("suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "isometry", "hopf", "clifford", "ope", "affine", "oracle"}));
  auto* mckay = app.add_subcommand("mckay", "McKay Cartan matrix and its affine type");
  for (auto* s : {classes, chartable, verify, mckay}) s->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Document d;
    if (*classes) d = cmd_classes(cfg, err);
    if (*chartable) d = cmd_chartable(cfg, err);
    if (*verify) d = cmd_verify(cfg, suite, err);
    if (*mckay) d = cmd_mckay(cfg, err);
    emit(cfg, d, out);
    return kOk;
  } catch (const VerificationFailed& f) {
    emit(cfg, f.doc, out);
    err << "verification failed\n";
    return kVerification;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace spinwreath::cli
