#include <catch_amalgamated.hpp>

#include "degdel/graph.hpp"
#include "support.hpp"

using namespace degdel;

namespace {
undirected_graph k3() {
  std::vector<edge> es{{0, 1}, {1, 2}, {0, 2}};
  return undirected_graph(3, es);
}
undirected_graph figu() {
  std::vector<edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 4}};
  return undirected_graph(7, es);
}
directed_graph figd() {
  std::vector<edge> as{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 4}, {5, 1}, {3, 6}, {0, 5}};
  return directed_graph(7, as);
}
}  // namespace

TEST_CASE("degree basics") {
  auto g = k3();
  for (vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(undirected_graph(1).degree(0) == 0);
  CHECK(figu().degree(1) == 3);
  CHECK_THROWS_AS(g.degree(3), usage_error);
  CHECK_THROWS_AS(g.degree(-1), usage_error);
}

TEST_CASE("in-degree") {
  std::vector<edge> two{{0, 1}, {1, 0}};
  directed_graph c2(2, two);
  CHECK(c2.in_degree(0) == 1);
  CHECK_THROWS_AS(c2.in_degree(2), usage_error);
}

TEST_CASE("construction rejects loops and duplicates") {
  std::vector<edge> loop{{1, 1}};
  std::vector<edge> dup{{0, 1}, {1, 0}};
  std::vector<edge> range{{0, 3}};
  CHECK_THROWS_AS(undirected_graph(3, loop), usage_error);
  CHECK_THROWS_AS(undirected_graph(3, dup), usage_error);
  CHECK_THROWS_AS(undirected_graph(3, range), usage_error);
  CHECK_THROWS_AS(directed_graph(3, loop), usage_error);
  std::vector<edge> twice{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(directed_graph(3, twice), usage_error);
  CHECK_NOTHROW(directed_graph(3, dup));
}

TEST_CASE("neighbour lists are sorted and symmetric") {
  auto g = figu();
  int sum = 0;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (vertex u : nb) CHECK(g.has_edge(u, v));
    sum += g.degree(v);
  }
  CHECK(sum == 2 * g.edge_count());
  auto d = figd();
  for (vertex v = 0; v < d.vertex_count(); ++v)
    for (vertex u : d.out_neighbors(v)) {
      auto in = d.in_neighbors(u);
      CHECK(std::find(in.begin(), in.end(), v) != in.end());
    }
}

TEST_CASE("delete_vertices") {
  auto g = figu();
  auto same = delete_vertices(g, {});
  CHECK(same.graph.edges() == g.edges());
  for (vertex v = 0; v < 7; ++v) CHECK(same.old_to_new[v] == v);

  auto e = delete_vertices(k3(), {1});
  CHECK(e.graph.vertex_count() == 2);
  CHECK(e.graph.edge_count() == 1);
  CHECK(e.old_to_new == std::vector<vertex>{0, -1, 1});

  auto t = delete_vertices(g, {1});
  CHECK(t.graph.vertex_count() == 6);
  CHECK(t.graph.edge_count() == 5);
  CHECK(is_acyclic(t.graph));
  int c = 0;
  connected_components(t.graph, &c);
  CHECK(c == 1);
}

TEST_CASE("delete_vertices composes") {
  rng_engine rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    auto g = test::sample_undirected(9, 0.4, rng);
    test::mask a = static_cast<test::mask>(uniform_below(rng, 512));
    test::mask b = static_cast<test::mask>(uniform_below(rng, 512)) & ~a;
    auto first = delete_vertices(g, test::from_mask(a));
    std::vector<vertex> b2;
    for (vertex v : test::from_mask(b)) b2.push_back(first.old_to_new[v]);
    auto twice = delete_vertices(first.graph, vertex_set(b2));
    auto once = delete_vertices(g, test::from_mask(a | b));
    CHECK(twice.graph.edges() == once.graph.edges());
  }
}

TEST_CASE("acyclicity") {
  std::vector<edge> p3{{0, 1}, {1, 2}};
  CHECK(is_acyclic(undirected_graph(3, p3)));
  CHECK(is_acyclic(directed_graph(3, p3)));
  CHECK_FALSE(is_acyclic(k3()));
  CHECK_FALSE(is_acyclic(figd()));
  CHECK(is_acyclic(delete_vertices(figd(), {0, 1}).graph));
}

TEST_CASE("directed acyclicity agrees with peeling on random digraphs") {
  rng_engine rng(11);
  for (int rep = 0; rep < 3000; ++rep) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));
    auto g = test::sample_directed(n, 0.15 + 0.1 * (rep % 4), rng);
    CHECK(is_acyclic(g) == (test::ref_fvs(g) == 0));
  }
}

TEST_CASE("connected components") {
  int c = 0;
  auto id = connected_components(undirected_graph(3), &c);
  CHECK(c == 3);
  CHECK(id == std::vector<int>{0, 1, 2});
  connected_components(k3(), &c);
  CHECK(c == 1);
  std::vector<edge> two{{0, 3}, {1, 2}};
  id = connected_components(undirected_graph(4, two), &c);
  CHECK(c == 2);
  CHECK(id == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("strong components") {
  int c = 0;
  auto id = strongly_connected_components(figd(), &c);
  CHECK(c == 1);
  std::vector<edge> chain{{0, 1}, {1, 2}, {2, 1}};
  id = strongly_connected_components(directed_graph(3, chain), &c);
  CHECK(c == 2);
  CHECK(id[1] == id[2]);
  CHECK(id[0] != id[1]);
}

TEST_CASE("vertex_set") {
  vertex_set s{3, 1, 3, 2};
  CHECK(s.size() == 3);
  CHECK(s.ids() == std::vector<vertex>{1, 2, 3});
  CHECK(s.contains(2));
  s.insert(0);
  CHECK(s.ids().front() == 0);
  CHECK(set_union(vertex_set{1}, vertex_set{4}) == vertex_set{1, 4});
}
