#include "degdel/bench.hpp"

#include <chrono>
#include <sstream>

#include "degdel/bdd.hpp"
#include "degdel/feedback.hpp"
#include "degdel/generators.hpp"
#include "degdel/mdd.hpp"
#include "degdel/mid.hpp"
#include "degdel/oracles.hpp"
#include "json.hpp"

namespace degdel {

const char* const bench_csv_header = "instance,solver,n,m,k,d,s_e,s_v,decision,explored,micros";

namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* key, std::vector<int> dflt) {
  if (!j.contains(key)) return dflt;
  const auto& v = j.at(key);
  if (v.is_number_integer()) return {v.get<int>()};
  return v.get<std::vector<int>>();
}

}  // namespace

bench_suite parse_suite(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("bad suite json: ") + e.what());
  }
  bench_suite s;
  s.name = j.value("name", "suite");
  s.seed = j.value("seed", std::uint64_t(1));
  if (!j.contains("groups") || !j["groups"].is_array()) throw usage_error("suite needs a 'groups' array");
  for (const auto& g : j["groups"]) {
    bench_group b;
    b.generator = g.value("generator", "");
    if (b.generator != "feedback_budget" && b.generator != "random_ud" && b.generator != "random_dir" &&
        b.generator != "forest")
      throw usage_error("unknown generator '" + b.generator + "'");
    b.n = int_list(g, "n", {});
    b.m = int_list(g, "m", {0});
    b.s_e = int_list(g, "s_e", {0});
    b.k = int_list(g, "k", {2});
    b.d = int_list(g, "d", {2});
    b.repeat = g.value("repeat", 1);
    if (g.contains("solvers")) b.solvers = g["solvers"].get<std::vector<std::string>>();
    if (b.n.empty()) throw usage_error("group needs 'n'");
    s.groups.push_back(b);
  }
  return s;
}

bench_suite builtin_suite(const std::string& name) {
  bench_suite s;
  s.name = name;
  s.seed = 20240601;
  if (name == "counters") {
    bench_group a;
    a.generator = "feedback_budget";
    a.n = {20, 30};
    a.s_e = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    a.k = {2, 4, 8};
    a.d = {2, 3};
    a.repeat = 3;
    a.solvers = {"mdd_search", "bdd"};
    bench_group b;
    b.generator = "random_dir";
    b.n = {8, 10};
    b.m = {10, 14, 18};
    b.k = {1, 2, 3};
    b.repeat = 4;
    b.solvers = {"mid"};
    s.groups = {a, b};
  } else if (name == "smoke") {
    bench_group a;
    a.generator = "feedback_budget";
    a.n = {10};
    a.s_e = {1, 3};
    a.k = {2};
    a.d = {2};
    a.solvers = {"mdd_search", "mdd_solv_dp", "mdd_solv_ilp", "oracle_mdd", "bdd", "oracle_bdd"};
    bench_group b;
    b.generator = "random_dir";
    b.n = {8};
    b.m = {14};
    b.k = {2};
    b.solvers = {"mid", "oracle_mid"};
    s.groups = {a, b};
  } else {
    throw usage_error("unknown builtin suite '" + name + "'");
  }
  return s;
}

namespace {

int exact_fvs_size(const undirected_graph& g) {
  try {
    auto f = min_feedback_vertex_set(g, {}, 24);
    return f ? f->size() : -1;
  } catch (const usage_error&) {
    return -1;
  }
}

int exact_fvs_size(const directed_graph& g) {
  try {
    auto f = min_feedback_vertex_set(g, {}, 24);
    return f ? f->size() : -1;
  } catch (const usage_error&) {
    return -1;
  }
}

template <class F>
void timed(bench_record& r, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    solve_result res = f();
    r.decision = res.yes ? "YES" : "NO";
    r.explored = res.explored;
  } catch (const solver_refusal&) {
    r.decision = "SKIP";
    r.explored = 0;
  }
  auto t1 = std::chrono::steady_clock::now();
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
}

void run_undirected(const std::string& id, const undirected_graph& g, const bench_group& grp,
                    std::vector<bench_record>& out) {
  const int se = feedback_edge_number(g);
  const int sv = exact_fvs_size(g);
  feedback_edge_set fes = min_feedback_edge_set(g);
  for (int k : grp.k)
    for (const auto& solver : grp.solvers) {
      const bool degree_bound = solver == "bdd" || solver == "oracle_bdd";
      std::vector<int> ds = degree_bound ? grp.d : std::vector<int>{-1};
      for (int d : ds) {
        bench_record r{id, solver, g.vertex_count(), g.edge_count(), k, d, se, sv, "", 0, 0};
        if (!degree_bound && g.vertex_count() == 0) continue;
        mdd_instance mi{g, 0, k};
        if (solver == "mdd_search") {
          timed(r, [&] { return mdd_search(mi, fes); });
        } else if (solver == "mdd_solv_dp" || solver == "mdd_solv_ilp") {
          auto fvs = min_feedback_vertex_set(g, {0}, 24);
          if (!fvs) continue;
          auto backend = solver == "mdd_solv_dp" ? annotated_backend::dp : annotated_backend::ilp;
          timed(r, [&] { return mdd_solv(mi, *fvs, backend); });
        } else if (solver == "oracle_mdd") {
          timed(r, [&] { return oracle_mdd(mi); });
        } else if (solver == "bdd") {
          timed(r, [&] { return solve_bdd(bdd_instance{g, d, k}, fes); });
        } else if (solver == "oracle_bdd") {
          timed(r, [&] { return oracle_bdd(bdd_instance{g, d, k}); });
        } else {
          throw usage_error("solver '" + solver + "' does not take undirected graphs");
        }
        out.push_back(r);
      }
    }
}

void run_directed(const std::string& id, const directed_graph& g, const bench_group& grp,
                  std::vector<bench_record>& out) {
  int sa = -1;
  try {
    sa = feedback_arc_number(g, 18);
  } catch (const usage_error&) {
  }
  const int sv = exact_fvs_size(g);
  for (int k : grp.k)
    for (const auto& solver : grp.solvers) {
      bench_record r{id, solver, g.vertex_count(), g.arc_count(), k, -1, sa, sv, "", 0, 0};
      mid_instance mi{g, 0, k};
      if (solver == "mid") {
        std::optional<int> cap;
        if (sv >= 0) cap = sv;
        timed(r, [&] { return solve_mid(mi, cap); });
      } else if (solver == "oracle_mid") {
        timed(r, [&] { return oracle_mid(mi); });
      } else {
        throw usage_error("solver '" + solver + "' does not take directed graphs");
      }
      out.push_back(r);
    }
}

}  // namespace

std::vector<bench_record> run_bench(const bench_suite& suite) {
  std::vector<bench_record> out;
  for (std::size_t gi = 0; gi < suite.groups.size(); ++gi) {
    const auto& grp = suite.groups[gi];
    const bool by_se = grp.generator == "feedback_budget";
    const auto& second = by_se ? grp.s_e : grp.m;
    std::uint64_t serial = 0;
    for (int n : grp.n)
      for (int x : second)
        for (int rep = 0; rep < grp.repeat; ++rep) {
          std::uint64_t seed = suite.seed * 1000003ULL + gi * 7919ULL + serial++;
          std::ostringstream id;
          id << 'g' << gi << "-n" << n << (by_se ? "-se" : "-m") << x << "-r" << rep;
          if (grp.generator == "random_dir") {
            run_directed(id.str(), gen_random_directed(n, x, seed), grp, out);
          } else {
            undirected_graph g = grp.generator == "feedback_budget" ? gen_with_feedback_budget(n, x, seed)
                                 : grp.generator == "forest"        ? gen_forest(n, seed)
                                                                    : gen_random_undirected(n, x, seed);
            run_undirected(id.str(), g, grp, out);
          }
        }
  }
  return out;
}

std::string to_csv_row(const bench_record& r) {
  std::ostringstream os;
  os << r.instance << ',' << r.solver << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.d << ',' << r.s_e << ','
     << r.s_v << ',' << r.decision << ',' << r.explored << ',' << r.micros;
  return os.str();
}

bench_record parse_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  if (f.size() != 11) throw usage_error("csv row needs 11 fields");
  try {
    bench_record r;
    r.instance = f[0];
    r.solver = f[1];
    r.n = std::stoi(f[2]);
    r.m = std::stoi(f[3]);
    r.k = std::stoi(f[4]);
    r.d = std::stoi(f[5]);
    r.s_e = std::stoi(f[6]);
    r.s_v = std::stoi(f[7]);
    r.decision = f[8];
    r.explored = std::stoull(f[9]);
    r.micros = std::stoull(f[10]);
    return r;
  } catch (const std::logic_error&) {
    throw usage_error("bad csv field");
  }
}

}  // namespace degdel
