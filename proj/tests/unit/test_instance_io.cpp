#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "degdel/feedback.hpp"
#include "degdel/instance_io.hpp"
#include "support.hpp"

using namespace degdel;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
std::string drop_comments(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  for (std::string line; std::getline(in, line);)
    if (line.empty() || line[0] != '#') out += line + '\n';
  return out;
}
int error_line(const std::string& text) {
  try {
    parse_instance_string(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("fixtures load") {
  auto u = read_instance(test::testdata("figu.gr"));
  CHECK(u.kind == instance_kind::ud);
  CHECK(to_undirected(u).vertex_count() == 7);
  CHECK(to_undirected(u).edge_count() == 8);
  auto d = read_instance(test::testdata("figd.gr"));
  CHECK(to_directed(d).arc_count() == 11);
  auto m = read_instance(test::testdata("figmid.gr"));
  CHECK(m.find_vertex("wc") == 0);
  CHECK(m.find_int("k") == 2);
  REQUIRE(m.legend.size() == 3);
  CHECK(m.legend[1].first == "b");
  CHECK(m.legend[1].second.front() == 1);
}

TEST_CASE("round trip modulo comments") {
  for (auto name : {"figu.gr", "figd.gr", "figmid.gr"}) {
    std::string text = slurp(test::testdata(name));
    std::string again = write_instance(parse_instance_string(text));
    CHECK(drop_comments(again) == drop_comments(text));
    CHECK(write_instance(parse_instance_string(again)) == again);
  }
  auto f = from_sets(4, {{0, 2}, {3}});
  f.annotate("k", {1});
  auto back = parse_instance_string(write_instance(f));
  CHECK(back.sets == f.sets);
  CHECK(back.find_int("k") == 1);
  f.notes.push_back("param x");
  CHECK(write_instance(f).find("# param x\n") != std::string::npos);
}

TEST_CASE("strict validation") {
  CHECK(error_line("p ud 3 1\ne 3 3\n") == 2);
  CHECK(error_line("p ud 3 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(error_line("p ud 3 2\ne 1 2\n") > 0);
  CHECK(error_line("p ud 3 1\ne 1 4\n") == 2);
  CHECK(error_line("e 1 2\n") == 1);
  CHECK(error_line("p ud 3 1\n# c\ne 1 x\n") == 3);
  CHECK(error_line("p ud 3 0\na wc 1\na wc 2\n") == 3);
  CHECK(error_line("p ud 3 0\na colour 1\n") == 2);
  CHECK(error_line("p shs 3 1\ns 4\n") == 2);
  CHECK(error_line("p dir 2 2\ne 1 2\ne 2 1\n") == 0);
  CHECK(error_line("p dir 2 2\ne 1 2\ne 1 2\n") == 3);
  CHECK(error_line("p ud 2 0\na wc 3\n") == 2);
}

TEST_CASE("witness and list helpers") {
  CHECK(parse_witness("2,4") == vertex_set{1, 3});
  CHECK(parse_witness("2 4") == vertex_set{1, 3});
  CHECK(parse_witness("").empty());
  CHECK_THROWS_AS(parse_witness("0"), usage_error);
  CHECK(format_witness(vertex_set{1, 3}) == "2,4");
  std::istringstream es("# size 1\ne 3 1\n");
  CHECK(parse_edge_list(es) == std::vector<edge>{{0, 2}});
  std::istringstream vs("v 1 3\n");
  CHECK(parse_vertex_list(vs) == vertex_set{0, 2});
}

TEST_CASE("conversions reject the wrong kind") {
  auto d = read_instance(test::testdata("figd.gr"));
  CHECK_THROWS_AS(to_undirected(d), usage_error);
  auto u = read_instance(test::testdata("figu.gr"));
  CHECK_THROWS_AS(to_directed(u), usage_error);
}
