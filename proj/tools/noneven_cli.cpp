// Command-line surface for the noneven toolkit: classification, witness
// search, family generators, theorem re-verification, and small catalogs.
//
// Exit codes: 0 success, 1 semantic negative (no witness / counterexample),
// 2 usage or parse error.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noneven/noneven.hpp"

namespace {

using namespace noneven;

uint64_t default_seed() {
  if (const char* env = std::getenv("NONEVEN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 20260823ull;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

const char* yn(bool b) { return b ? "true" : "false"; }

void print_record(std::ostream& out, const ClassificationRecord& r) {
  out << "canonical_id=" << std::hex << r.canon << std::dec << '\n';
  out << "n=" << r.n << '\n' << "m=" << r.m << '\n';
  for (const std::string& name : ClassificationRecord::flag_names())
    out << name << '=' << yn(r.flag(name)) << '\n';
  out << "indegrees=";
  for (size_t i = 0; i < r.indeg.size(); ++i) out << (i ? "," : "") << r.indeg[i];
  out << "\noutdegrees=";
  for (size_t i = 0; i < r.outdeg.size(); ++i) out << (i ? "," : "") << r.outdeg[i];
  out << '\n';
}

// ---- boolean filter expressions over flag names: & | ! ( ) ----

struct FilterParser {
  std::string src;
  size_t pos = 0;
  const ClassificationRecord& rec;

  explicit FilterParser(std::string s, const ClassificationRecord& r)
      : src(std::move(s)), rec(r) {}

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool expr() {
    bool v = term();
    while (eat('|')) v = term() || v;
    return v;
  }
  bool term() {
    bool v = factor();
    while (eat('&')) v = factor() && v;
    return v;
  }
  bool factor() {
    skip();
    if (eat('!')) return !factor();
    if (eat('(')) {
      bool v = expr();
      if (!eat(')')) throw std::invalid_argument("filter: missing ')'");
      return v;
    }
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("filter: expected flag name");
    return rec.flag(src.substr(start, pos - start));
  }
  bool run() {
    bool v = expr();
    skip();
    if (pos != src.size()) throw std::invalid_argument("filter: trailing input");
    return v;
  }
};

int cmd_classify(const std::string& file, const std::string& kind) {
  std::string text = read_file(file);
  if (kind == "pattern") {
    SignPattern h = parse_pattern(text);
    WeightedDigraph wd = digraph_of(h);
    ClassificationRecord rec = classify_digraph(wd.base);
    std::cout << "kind=pattern\n";
    print_record(std::cout, rec);
    bool sns = h.order() <= 8 && is_sns(h);
    std::cout << "sns=" << yn(sns) << '\n';
    std::cout << "combinatorially_singular=" << yn(is_combinatorially_singular(h)) << '\n';
    Prop31Result p31 = prop31_check(h);
    std::cout << "prop31=" << (p31.pass ? "pass" : "fail") << '\n';
    if (!p31.pass)
      std::cout << "prop31_failing_rows=" << p31.i + 1 << ',' << p31.j + 1 << '\n';
    if (sns) {
      Prop61Result p61 = prop61_check(h);
      std::cout << "prop61=" << (p61.pass ? "pass" : "fail") << '\n';
      if (!p61.pass)
        std::cout << "prop61_failing_entry=" << p61.i + 1 << ',' << p61.j + 1
                  << " condition=" << p61.condition << '\n';
    } else {
      std::cout << "prop61=n/a\n";
    }
    std::cout << "irreducible=" << yn(is_irreducible(h)) << '\n';
  } else if (kind == "digraph") {
    WeightedDigraph wd = parse_digraph(text);
    std::cout << "kind=digraph\n";
    print_record(std::cout, classify_digraph(wd.base));
  } else if (kind == "graph") {
    UndirectedGraph g = parse_graph(text);
    std::cout << "kind=graph\n";
    print_record(std::cout, classify_digraph(symmetrize(g)));
    bool bic = is_biconnected(g);
    std::cout << "biconnected=" << yn(bic) << '\n';
    if (bic) {
      std::cout << "cockade_subgraph=" << yn(is_cockade_subgraph(g)) << '\n';
      std::cout << "cockade=" << yn(is_cockade(g)) << '\n';
    }
  } else {
    throw CLI::ValidationError("--kind must be pattern, digraph, or graph");
  }
  return 0;
}

void print_matrix(std::ostream& out, const RealMatrix& m) {
  out.precision(17);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
}

int cmd_witness(const std::string& file, WitnessOptions opt) {
  SignPattern h = parse_pattern(read_file(file));
  WitnessSearchResult res = find_symplectic_pair(h, opt);
  if (!res.witness) {
    std::cout << "NOT-FOUND best_residual=" << res.best_residual << '\n';
    return 1;
  }
  std::cout << "A\n";
  print_matrix(std::cout, res.witness->A);
  std::cout << "D\n";
  print_matrix(std::cout, res.witness->D);
  std::cout << "residual " << res.witness->residual << '\n';
  return 0;
}

int cmd_generate(const std::string& family, int k, int steps,
                 const std::string& blossoms, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (family == "cockade") {
    // each step attaches across the previous step's new middle edge
    CockadeSpec spec;
    Arc target{0, 1};
    for (int t = 0; t < steps; ++t) {
      spec.steps.push_back(target);
      target = {4 + 2 * t, 5 + 2 * t};
    }
    write_graph(out, build_cockade(spec));
  } else if (family == "caterpillar") {
    CaterpillarSpec spec;
    spec.k = k;
    if (!blossoms.empty()) {
      std::istringstream ss(blossoms);
      std::string tok;
      while (std::getline(ss, tok, ',')) spec.blossoms.push_back(std::stoi(tok));
    }
    write_digraph(out, build_extended_caterpillar(spec));
  } else if (family == "w4") {
    write_digraph(out, w4());
  } else if (family == "double-cycle") {
    write_digraph(out, double_cycle(k));
  } else {
    throw CLI::ValidationError("unknown family '" + family + "'");
  }
  return 0;
}

int cmd_verify(const std::string& id, int n, uint64_t seed) {
  VerificationReport rep;
  if (id == "st") rep = verify_seymour_thomassen(n, seed);
  else if (id == "p41") rep = verify_prop_4_1(n);
  else if (id == "t42") rep = verify_theorem_4_2(n, WitnessOptions{.seed = seed});
  else if (id == "t51") rep = verify_theorem_5_1(n);
  else if (id == "t52") rep = verify_theorem_5_2(n);
  else if (id == "semicomplete") rep = verify_semicomplete_characterization(n);
  else if (id == "t63") rep = verify_theorem_6_3(n, WitnessOptions{.seed = seed});
  else if (id == "bs") rep = verify_brualdi_shader(n);
  else if (id == "c3") rep = emergent_3connected_check(n);
  else throw CLI::ValidationError("unknown theorem id '" + id + "'");
  write_report(std::cout, rep);
  return rep.ok() ? 0 : 1;
}

int cmd_catalog(int n, const std::string& filter, const std::string& out_path) {
  EnumFilters f;
  if (n == 6) {
    // only the symmetric universe is tractable at n = 6
    if (filter.find("symmetric") == std::string::npos ||
        filter.find("!symmetric") != std::string::npos)
      throw CLI::ValidationError("catalog: n=6 requires a 'symmetric' filter");
    f.symmetric_only = true;
  }
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "#canonical_id\tn\tm\t";
  for (size_t i = 0; i < ClassificationRecord::flag_names().size(); ++i)
    out << (i ? "," : "") << ClassificationRecord::flag_names()[i];
  out << "\tindegrees\toutdegrees\n";
  for (const Digraph& d : enumerate_digraphs(n, f)) {
    ClassificationRecord rec = classify_digraph(d);
    if (!filter.empty() && !FilterParser(filter, rec).run()) continue;
    out << record_line(rec) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noneven digraph and symplectic-pair toolkit"};
  app.require_subcommand(1);

  std::string file, kind = "digraph", family, blossoms, filter, out_path, theorem;
  int k = 2, steps = 0, n = -1;
  uint64_t seed = default_seed();
  WitnessOptions wopt;
  wopt.seed = seed;

  auto* classify = app.add_subcommand("classify", "classify a pattern, digraph, or graph");
  classify->add_option("file", file, "input file")->required();
  classify->add_option("--kind", kind, "pattern|digraph|graph (default digraph)");

  auto* witness = app.add_subcommand("witness", "search for a symplectic-pair witness");
  witness->add_option("file", file, "pattern file")->required();
  witness->add_option("--budget", wopt.budget, "restart budget")->check(CLI::PositiveNumber);
  witness->add_option("--tol", wopt.tol, "max-norm residual tolerance")
      ->check(CLI::Range(std::numeric_limits<double>::min(),
                         std::numeric_limits<double>::max()));
  witness->add_option("--seed", wopt.seed, "random seed");
  witness->add_flag("--orthogonal", wopt.orthogonal, "constrain D = A");

  auto* generate = app.add_subcommand("generate", "emit a named digraph/graph family");
  generate->add_option("family", family, "cockade|caterpillar|w4|double-cycle")->required();
  generate->add_option("--k", k, "backbone length / cycle length");
  generate->add_option("--steps", steps, "cockade construction steps")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--blossoms", blossoms, "comma list of pendant counts");
  generate->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-verify a characterization theorem");
  verify->add_option("theorem", theorem, "st|p41|t42|t51|t52|semicomplete|t63|bs|c3")
      ->required();
  verify->add_option("--n", n, "size bound");
  verify->add_option("--seed", seed, "random seed");

  auto* catalog = app.add_subcommand("catalog", "classification records per iso class");
  catalog->add_option("--n", n, "digraph order")->required()->check(CLI::Range(1, 6));
  catalog->add_option("--filter", filter, "boolean expression over flags");
  catalog->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(file, kind);
    if (witness->parsed()) return cmd_witness(file, wopt);
    if (generate->parsed()) return cmd_generate(family, k, steps, blossoms, out_path);
    if (verify->parsed()) {
      static const std::map<std::string, int> defaults = {
          {"st", 4}, {"p41", 5}, {"t42", 4}, {"t51", 4}, {"t52", 4},
          {"semicomplete", 4}, {"t63", 4}, {"bs", 3}, {"c3", 4}};
      auto it = defaults.find(theorem);
      if (n < 0 && it != defaults.end()) n = it->second;
      return cmd_verify(theorem, n, seed);
    }
    if (catalog->parsed()) return cmd_catalog(n, filter, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const noneven::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
