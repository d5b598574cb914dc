#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "degdel/cli.hpp"
#include "degdel/feedback.hpp"
#include "degdel/instance_io.hpp"
#include "degdel/mdd.hpp"
#include "support.hpp"

using namespace degdel;
namespace fs = std::filesystem;

namespace {
struct run_out {
  int code;
  std::string out, err;
};

run_out run(std::vector<std::string> args) {
  args.insert(args.begin(), "fbsolve");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = fs::temp_directory_path() / "fbsolve_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string put(const std::string& name, const std::string& text) {
  auto p = tmp(name);
  std::ofstream(p) << text;
  return p;
}
}  // namespace

TEST_CASE("solve the figure instance") {
  auto r = run({"solve", "mid", test::testdata("figmid.gr")});
  CHECK(r.code == 0);
  CHECK(r.out == "YES witness=2,4\n");
  CHECK(run({"solve", "mid", test::testdata("figmid.gr"), "--backend", "oracle"}).out == "YES witness=2,4\n");
  auto no = put("figmid_k1.gr", [] {
    auto f = read_instance(test::testdata("figmid.gr"));
    f.annotations[1].values = {1};
    return write_instance(f);
  }());
  auto n = run({"solve", "mid", no});
  CHECK(n.code == 1);
  CHECK(n.out == "NO\n");
}

TEST_CASE("feedback sets on fixtures") {
  auto r = run({"feedback", "fes", test::testdata("figu.gr")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# size 2\n", 0) == 0);
  int lines = 0;
  std::istringstream in(r.out);
  for (std::string l; std::getline(in, l);) lines += l.rfind("e ", 0) == 0;
  CHECK(lines == 2);
  CHECK(run({"feedback", "fvs", test::testdata("figu.gr")}).out == "# size 1\nv 2\n");
  CHECK(run({"feedback", "fvs", test::testdata("figd.gr")}).out == "# size 2\nv 1 2\n");
  CHECK(run({"feedback", "fas", test::testdata("figd.gr")}).out.rfind("# size 2\n", 0) == 0);
}

TEST_CASE("errors and usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "mid"}).code == 2);
  CHECK(run({"solve", "mdd", test::testdata("figu.gr")}).code == 2);  // no `a wc`
  CHECK(run({"solve", "mid", test::testdata("figmid.gr"), "--bogus"}).code == 2);
  CHECK(run({"solve", "mid", "/nonexistent/file.gr"}).code == 2);
  auto bad = put("loop.gr", "p ud 3 1\ne 3 3\n");
  auto r = run({"feedback", "fes", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mdd backends agree through the cli") {
  rng_engine rng(81);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 3 + static_cast<int>(uniform_below(rng, 6));
    auto g = test::sample_undirected(n, 0.5, rng);
    auto f = from_graph(g);
    f.annotate("wc", {1});
    f.annotate("k", {static_cast<int>(uniform_below(rng, 3))});
    auto p = put("mdd.gr", write_instance(f));
    auto fvs = min_feedback_vertex_set(g, {0});
    int search = run({"solve", "mdd", p}).code;
    CHECK(run({"solve", "mdd", p, "--backend", "oracle"}).code == search);
    if (!fvs) continue;
    CHECK(run({"solve", "mdd", p, "--backend", "dp"}).code == search);
    CHECK(run({"solve", "mdd", p, "--backend", "ilp"}).code == search);
    CHECK(run({"solve", "mdd", p, "--backend", "xp"}).code == search);
  }
}

TEST_CASE("explicit feedback set files") {
  auto f = read_instance(test::testdata("figu.gr"));
  f.annotate("wc", {4});
  f.annotate("k", {2});
  auto p = put("figu_wc.gr", write_instance(f));
  auto fes = put("figu.fes", "e 1 7\ne 2 5\n");
  auto fvs = put("figu.fvs", "v 2\n");
  int base = run({"solve", "mdd", p}).code;
  CHECK(run({"solve", "mdd", p, "--fes", fes}).code == base);
  CHECK(run({"solve", "mdd", p, "--backend", "dp", "--fvs", fvs}).code == base);
  auto notfes = put("figu.bad", "e 1 2\n");
  CHECK(run({"solve", "mdd", p, "--fes", notfes}).code == 2);
}

TEST_CASE("bdd, kernelize and verify") {
  auto f = read_instance(test::testdata("figu.gr"));
  f.annotate("d", {1});
  f.annotate("k", {3});
  auto p = put("figu_bdd.gr", write_instance(f));
  auto r = run({"solve", "bdd", p});
  CHECK(r.code == 0);
  auto w = r.out.substr(std::string("YES witness=").size());
  w.pop_back();
  CHECK(run({"verify", p, "--witness", w}).code == 0);
  CHECK(run({"solve", "bdd", p, "--backend", "oracle"}).code == 0);
  CHECK(run({"verify", p, "--witness", "1"}).code == 1);
  CHECK(run({"verify", test::testdata("figmid.gr"), "--witness", "2,4"}).out == "VALID\n");

  auto g = gen_with_feedback_budget(30, 4, 3);
  auto kf = from_graph(g);
  kf.annotate("wc", {1});
  kf.annotate("k", {3});
  auto kp = put("kern.gr", write_instance(kf));
  auto kr = run({"kernelize", "mdd", kp});
  auto ko = remove_low_degree({g, 0, 3});
  if (ko.resolved) {
    CHECK(kr.code == (*ko.resolved ? 0 : 1));
  } else {
    CHECK(kr.code == 0);
    auto red = parse_instance_string(kr.out);
    CHECK(to_undirected(red).edges() == ko.reduced.g.edges());
  }
}

TEST_CASE("reduce and gen") {
  auto src = put("p3.gr", "p ud 3 2\ne 1 2\ne 2 3\n");
  auto out = tmp("ds.gr");
  CHECK(run({"reduce", "ds-mid", src, "--k", "1", "--out", out}).code == 0);
  auto f = read_instance(out);
  CHECK(f.kind == instance_kind::dir);
  CHECK(f.find_int("k") == 2);
  CHECK(f.legend.front().first == "w_c");
  CHECK(run({"solve", "mid", out}).code == 0);  // the middle vertex dominates
  auto is = run({"reduce", "is-mdd", src, "--k", "2"});
  CHECK(is.code == 0);
  CHECK(is.out.find("# param") != std::string::npos);
  auto shs = put("h.gr", "p shs 3 2\ns 1 2\ns 3\n");
  CHECK(run({"reduce", "shs-mdd", shs, "--k", "2"}).code == 0);
  CHECK(run({"reduce", "shs-mdd", src, "--k", "2"}).code == 2);

  auto a = run({"gen", "random", "--n", "10", "--m", "15", "--seed", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"gen", "random", "--n", "10", "--m", "15", "--seed", "4"}).out);
  CHECK(to_undirected(parse_instance_string(a.out)).edge_count() == 15);
  auto dgen = run({"gen", "random", "--kind", "dir", "--n", "6", "--m", "9", "--seed", "1", "--wc", "1", "--k", "2"});
  CHECK(parse_instance_string(dgen.out).find_int("k") == 2);
  auto fb = run({"gen", "feedback", "--n", "12", "--se", "3", "--seed", "2"});
  CHECK(min_feedback_edge_set(to_undirected(parse_instance_string(fb.out))).size() == 3);
  CHECK(run({"gen", "random", "--n", "3", "--m", "9"}).code == 2);
}

TEST_CASE("bench writes csv") {
  auto csv = tmp("smoke.csv");
  auto r = run({"bench", "--suite", "smoke", "--out", csv});
  CHECK(r.code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "instance,solver,n,m,k,d,s_e,s_v,decision,explored,micros");
  auto suite = put("suite.json", R"({"groups":[{"generator":"forest","n":6,"k":1,"d":1,"solvers":["bdd"]}]})");
  auto j = run({"bench", "--suite", suite});
  CHECK(j.code == 0);
  CHECK(j.out.find(",bdd,6,") != std::string::npos);
}
