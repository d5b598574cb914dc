#include "degdel/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degdel/bdd.hpp"
#include "degdel/bench.hpp"
#include "degdel/feedback.hpp"
#include "degdel/generators.hpp"
#include "degdel/instance_io.hpp"
#include "degdel/mdd.hpp"
#include "degdel/mid.hpp"
#include "degdel/oracles.hpp"
#include "degdel/reductions.hpp"

namespace degdel {

namespace {

int required_int(const instance_file& f, const char* key) {
  auto v = f.find_int(key);
  if (!v) throw usage_error(std::string("instance lacks `a ") + key + "`");
  return *v;
}

vertex required_vertex(const instance_file& f, const char* key) {
  auto v = f.find_vertex(key);
  if (!v) throw usage_error(std::string("instance lacks `a ") + key + "`");
  return *v;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  return in;
}

int report(const solve_result& r, std::ostream& out) {
  if (r.yes) {
    out << "YES witness=" << format_witness(*r.witness) << '\n';
    return 0;
  }
  out << "NO\n";
  return 1;
}

void emit(const instance_file& f, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << write_instance(f);
  else
    write_instance_file(f, path);
}

feedback_edge_set fes_option(const undirected_graph& g, const std::string& opt) {
  if (opt == "auto") return min_feedback_edge_set(g);
  auto in = open_in(opt);
  feedback_edge_set f;
  for (auto [u, v] : parse_edge_list(in)) f.edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

feedback_vertex_set fvs_option(const undirected_graph& g, vertex wc, const std::string& opt) {
  if (opt == "auto") {
    auto f = min_feedback_vertex_set(g, vertex_set({wc}));
    if (!f) throw usage_error("no feedback vertex set avoids wc");
    return *f;
  }
  auto in = open_in(opt);
  return feedback_vertex_set{parse_vertex_list(in)};
}

int solve_cmd(const std::string& problem, const std::string& path, std::string backend, const std::string& fes,
              const std::string& fvs, std::ostream& out) {
  instance_file f = read_instance(path);
  if (problem == "mid") {
    mid_instance inst{to_directed(f), required_vertex(f, "wc"), required_int(f, "k")};
    if (backend == "search") return report(solve_mid(inst), out);
    if (backend == "oracle") return report(oracle_mid(inst), out);
    if (backend == "acyclic") return report(solve_mid_acyclic(inst), out);
    throw usage_error("mid backends: search, oracle, acyclic");
  }
  if (problem == "mdd") {
    mdd_instance inst{to_undirected(f), required_vertex(f, "wc"), required_int(f, "k")};
    if (backend == "search") return report(mdd_search(inst, fes_option(inst.g, fes)), out);
    if (backend == "oracle") return report(oracle_mdd(inst), out);
    annotated_backend b;
    if (backend == "dp")
      b = annotated_backend::dp;
    else if (backend == "ilp")
      b = annotated_backend::ilp;
    else if (backend == "xp")
      b = annotated_backend::xp;
    else
      throw usage_error("mdd backends: search, dp, ilp, xp, oracle");
    return report(mdd_solv(inst, fvs_option(inst.g, inst.wc, fvs), b), out);
  }
  annotated_bdd_instance inst{to_undirected(f), f.find_vertices("unrem"), required_int(f, "d"), required_int(f, "k")};
  if (backend == "search") return report(solve_annotated_bdd(inst, fes_option(inst.g, fes)), out);
  if (backend == "oracle") return report(oracle_annotated_bdd(inst), out);
  if (backend == "forest") return report(solve_annotated_bdd_forest(inst), out);
  throw usage_error("bdd backends: search, oracle, forest");
}

int kernelize_cmd(const std::string& path, const std::string& out_path, std::ostream& out) {
  instance_file f = read_instance(path);
  mdd_instance inst{to_undirected(f), required_vertex(f, "wc"), required_int(f, "k")};
  kernel_output ko = remove_low_degree(inst);
  if (ko.resolved) {
    if (*ko.resolved) return report(solve_result::found(*ko.witness), out);
    return report(solve_result::no(), out);
  }
  instance_file g = from_graph(ko.reduced.g);
  g.annotate("wc", {ko.reduced.wc + 1});
  g.annotate("k", {ko.reduced.k});
  std::vector<vertex> orig;
  for (vertex v : ko.new_to_old) orig.push_back(v);
  g.legend.push_back({"original", orig});
  g.notes.push_back("kernel removed " + std::to_string(ko.removed.size()) + " vertices");
  emit(g, out_path, out);
  return 0;
}

int feedback_cmd(const std::string& what, const std::string& path, std::ostream& out) {
  instance_file f = read_instance(path);
  if (what == "fes") {
    auto s = min_feedback_edge_set(to_undirected(f));
    out << "# size " << s.size() << '\n';
    for (auto [u, v] : s.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return 0;
  }
  if (what == "fas") {
    auto s = min_feedback_arc_set(to_directed(f));
    out << "# size " << s.size() << '\n';
    for (auto [u, v] : s.arcs) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return 0;
  }
  vertex_set forbid = f.find_vertices("forbid");
  auto s = f.kind == instance_kind::dir ? min_feedback_vertex_set(to_directed(f), forbid)
                                        : min_feedback_vertex_set(to_undirected(f), forbid);
  if (!s) throw usage_error("every cycle runs through forbidden vertices only");
  out << "# size " << s->size() << '\n';
  out << 'v';
  for (vertex v : s->vertices) out << ' ' << v + 1;
  out << '\n';
  return 0;
}

template <class Instance>
void add_legend(instance_file& f, const reduction_output<Instance>& r) {
  for (auto& [role, ids] : r.legend) f.legend.push_back({role, std::vector<vertex>(ids.begin(), ids.end())});
  if (!r.parameter_note.empty()) f.notes.push_back("param " + r.parameter_note);
}

int reduce_cmd(const std::string& what, const std::string& path, int k, const std::string& out_path,
               std::ostream& out) {
  instance_file f = read_instance(path);
  instance_file o;
  if (what == "ds-mid") {
    auto r = reduce_ds_to_mid(to_undirected(f), k);
    o = from_graph(r.instance.g);
    o.annotate("wc", {r.instance.wc + 1});
    o.annotate("k", {r.instance.k});
    add_legend(o, r);
  } else if (what == "is-mdd" || what == "shs-mdd") {
    reduction_output<mdd_instance> r;
    if (what == "is-mdd") {
      r = reduce_is_to_mdd(to_undirected(f), k);
    } else {
      if (f.kind != instance_kind::shs) throw usage_error("shs-mdd needs a `p shs` file");
      r = reduce_suhs_to_mdd(f.n, f.sets, k);
    }
    o = from_graph(r.instance.g);
    o.annotate("wc", {r.instance.wc + 1});
    o.annotate("k", {r.instance.k});
    add_legend(o, r);
  } else {
    throw usage_error("reductions: ds-mid, is-mdd, shs-mdd");
  }
  emit(o, out_path, out);
  return 0;
}

struct gen_args {
  std::string kind = "ud";
  int n = 10, m = 0, se = 0;
  std::uint64_t seed = 1;
  int wc = 0, k = -1, d = -1;
  std::string out;
};

int gen_cmd(const std::string& what, const gen_args& a, std::ostream& out) {
  instance_file f;
  if (what == "random") {
    if (a.kind == "dir")
      f = from_graph(gen_random_directed(a.n, a.m, a.seed));
    else if (a.kind == "ud")
      f = from_graph(gen_random_undirected(a.n, a.m, a.seed));
    else
      throw usage_error("--kind is ud or dir");
  } else if (what == "forest") {
    f = from_graph(gen_forest(a.n, a.seed));
  } else if (what == "feedback") {
    f = from_graph(gen_with_feedback_budget(a.n, a.se, a.seed));
  } else {
    throw usage_error("generators: random, forest, feedback");
  }
  if (a.wc > 0) {
    if (a.wc > a.n) throw usage_error("--wc out of range");
    f.annotate("wc", {a.wc});
  }
  if (a.k >= 0) f.annotate("k", {a.k});
  if (a.d >= 0) f.annotate("d", {a.d});
  emit(f, a.out, out);
  return 0;
}

int bench_cmd(const std::string& suite, const std::string& out_path, std::ostream& out) {
  bench_suite s;
  if (std::filesystem::exists(suite)) {
    std::ifstream in(suite);
    std::stringstream ss;
    ss << in.rdbuf();
    s = parse_suite(ss.str());
  } else {
    s = builtin_suite(suite);
  }
  auto rows = run_bench(s);
  std::ofstream csv;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    csv.open(out_path);
    if (!csv) throw usage_error("cannot write " + out_path);
    sink = &csv;
  }
  *sink << bench_csv_header << '\n';
  for (const auto& r : rows) *sink << to_csv_row(r) << '\n';
  if (!out_path.empty()) out << "rows " << rows.size() << '\n';
  return 0;
}

int verify_cmd(const std::string& path, const std::string& witness, std::ostream& out) {
  instance_file f = read_instance(path);
  vertex_set w = parse_witness(witness);
  bool ok;
  if (f.kind == instance_kind::dir) {
    ok = is_mid_solution(mid_instance{to_directed(f), required_vertex(f, "wc"), required_int(f, "k")}, w);
  } else if (f.kind == instance_kind::ud && f.find("wc")) {
    ok = is_mdd_solution(mdd_instance{to_undirected(f), required_vertex(f, "wc"), required_int(f, "k")}, w);
  } else if (f.kind == instance_kind::ud && f.find("d")) {
    ok = is_annotated_bdd_solution(
        annotated_bdd_instance{to_undirected(f), f.find_vertices("unrem"), required_int(f, "d"), required_int(f, "k")},
        w);
  } else {
    throw usage_error("instance needs `a wc` (mid/mdd) or `a d` (bdd)");
  }
  out << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for degree-based vertex deletion", "fbsolve"};
  app.require_subcommand(1, 1);

  std::string problem, file, backend = "search", fes = "auto", fvs = "auto", out_path, what, witness, suite;
  int k = 0;
  gen_args ga;

  auto* solve = app.add_subcommand("solve", "Decide an instance; prints YES witness=<ids> or NO");
  solve->add_option("problem", problem, "mid, mdd or bdd")->required()->check(CLI::IsMember({"mid", "mdd", "bdd"}));
  solve->add_option("file", file)->required();
  solve->add_option("--backend", backend, "search, oracle, dp, ilp, xp, acyclic or forest");
  solve->add_option("--fes", fes, "auto or a file of `e u v` lines");
  solve->add_option("--fvs", fvs, "auto or a file of `v ids` lines");

  auto* kern = app.add_subcommand("kernelize", "Apply the low-degree reduction to an MDD instance");
  kern->add_option("problem", problem)->required()->check(CLI::IsMember({"mdd"}));
  kern->add_option("file", file)->required();
  kern->add_option("--out", out_path);

  auto* fb = app.add_subcommand("feedback", "Print a minimum feedback edge, vertex or arc set");
  fb->add_option("set", what)->required()->check(CLI::IsMember({"fes", "fvs", "fas"}));
  fb->add_option("file", file)->required();

  auto* red = app.add_subcommand("reduce", "Build a reduction target instance");
  red->add_option("reduction", what)->required()->check(CLI::IsMember({"ds-mid", "is-mdd", "shs-mdd"}));
  red->add_option("file", file)->required();
  red->add_option("--k", k)->required();
  red->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("generator", what)->required()->check(CLI::IsMember({"random", "forest", "feedback"}));
  gen->add_option("--kind", ga.kind, "ud or dir (random only)");
  gen->add_option("--n", ga.n);
  gen->add_option("--m", ga.m);
  gen->add_option("--se", ga.se, "extra edges over a spanning tree");
  gen->add_option("--seed", ga.seed);
  gen->add_option("--wc", ga.wc, "annotate wc (1-based)");
  gen->add_option("--k", ga.k, "annotate k");
  gen->add_option("--d", ga.d, "annotate d");
  gen->add_option("--out", ga.out);

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  bench->add_option("--suite", suite, "JSON suite file or builtin name (smoke, counters)")->required();
  bench->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "Check a witness against an instance");
  ver->add_option("file", file)->required();
  ver->add_option("--witness", witness, "1-based ids, comma or space separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return solve_cmd(problem, file, backend, fes, fvs, out);
    if (kern->parsed()) return kernelize_cmd(file, out_path, out);
    if (fb->parsed()) return feedback_cmd(what, file, out);
    if (red->parsed()) return reduce_cmd(what, file, k, out_path, out);
    if (gen->parsed()) return gen_cmd(what, ga, out);
    if (bench->parsed()) return bench_cmd(suite, out_path, out);
    if (ver->parsed()) return verify_cmd(file, witness, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace degdel
