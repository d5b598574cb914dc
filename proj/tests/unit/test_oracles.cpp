#include <catch_amalgamated.hpp>

#include "degdel/instance_io.hpp"
#include "degdel/oracles.hpp"
#include "support.hpp"

using namespace degdel;

namespace {
undirected_graph ug(int n, std::vector<edge> es) { return undirected_graph(n, es); }
const std::vector<edge> star3{{0, 1}, {0, 2}, {0, 3}};
mid_instance figmid(int k) {
  auto f = read_instance(test::testdata("figmid.gr"));
  return {to_directed(f), *f.find_vertex("wc"), k};
}
}  // namespace

TEST_CASE("oracle_mid") {
  auto single = oracle_mid({directed_graph(1), 0, 0});
  CHECK(single.yes);
  CHECK(single.witness->empty());
  auto two = oracle_mid(figmid(2));
  REQUIRE(two.yes);
  CHECK(two.witness == vertex_set{1, 3});  // b1, b3
  CHECK_FALSE(oracle_mid(figmid(1)).yes);
  CHECK(test::ref_min_mid(figmid(2).g, 0, 2) == 2);
}

TEST_CASE("oracle_mdd small truth table") {
  CHECK_FALSE(oracle_mdd({ug(4, star3), 0, 0}).yes);
  // wc a leaf of the star: only deleting everything else works
  for (int k = 0; k <= 2; ++k) CHECK_FALSE(oracle_mdd({ug(4, star3), 1, k}).yes);
  auto all = oracle_mdd({ug(4, star3), 1, 3});
  REQUIRE(all.yes);
  CHECK(all.witness == vertex_set{0, 2, 3});
  // P3 from an endpoint
  std::vector<edge> p3{{0, 1}, {1, 2}};
  CHECK_FALSE(oracle_mdd({ug(3, p3), 0, 1}).yes);
  CHECK(oracle_mdd({ug(3, p3), 0, 2}).witness == vertex_set{1, 2});
  // isolated wc next to a triangle
  auto iso = oracle_mdd({ug(4, {{1, 2}, {2, 3}, {1, 3}}), 0, 0});
  CHECK(iso.yes);
  CHECK(iso.witness->empty());
}

TEST_CASE("oracle_bdd") {
  auto s = oracle_bdd({ug(4, star3), 1, 1});
  REQUIRE(s.yes);
  CHECK(s.witness == vertex_set{0});
  CHECK(oracle_bdd({ug(2, {{0, 1}}), 0, 1}).yes);
  std::vector<edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK_FALSE(oracle_bdd({ug(4, k4), 1, 1}).yes);
  CHECK(oracle_bdd({ug(4, k4), 1, 2}).yes);
}

TEST_CASE("annotated oracles") {
  // deg(wc) already i, others above
  std::vector<edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<edge> pend = k4;
  pend.push_back({0, 4});
  auto triv = oracle_annotated_mdd({ug(5, pend), {}, 4, 0, 1});
  REQUIRE(triv.yes);
  CHECK(triv.witness->empty());
  // K4 minus any vertex is a triangle, so degree 2 at wc leaves others at 2
  CHECK_FALSE(oracle_annotated_mdd({ug(4, k4), {}, 0, 3, 2}).yes);
  // all neighbours in vf and deg(wc) > i
  CHECK_FALSE(oracle_annotated_mdd({ug(4, k4), {1, 2, 3}, 0, 3, 1}).yes);

  CHECK(oracle_annotated_bdd({ug(4, star3), {}, 1, 1}).yes == oracle_bdd({ug(4, star3), 1, 1}).yes);
  CHECK_FALSE(oracle_annotated_bdd({ug(4, star3), {0, 1, 2, 3}, 2, 4}).yes);
  auto centre = oracle_annotated_bdd({ug(4, star3), {0}, 1, 3});
  REQUIRE(centre.yes);
  CHECK(centre.witness->size() == 2);
}

TEST_CASE("source problem oracles") {
  auto k3 = ug(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(oracle_dominating_set(k3, 1).yes);
  CHECK_FALSE(oracle_independent_set(k3, 2).yes);
  CHECK(oracle_independent_set(k3, 1).yes);
  std::vector<std::vector<int>> sets{{0}, {1}};
  CHECK_FALSE(oracle_hitting_set(2, sets, 1).yes);
  CHECK(oracle_hitting_set(2, sets, 2).yes);
}

TEST_CASE("oracles agree with bitmask references") {
  rng_engine rng(21);
  for (int rep = 0; rep < 3000; ++rep) {
    int n = 1 + static_cast<int>(uniform_below(rng, 8));
    int k = static_cast<int>(uniform_below(rng, 4));
    vertex wc = static_cast<vertex>(uniform_below(rng, n));
    auto g = test::sample_undirected(n, 0.45, rng);
    auto dg = test::sample_directed(n, 0.35, rng);
    int d = static_cast<int>(uniform_below(rng, 4));

    auto a = oracle_mdd({g, wc, k});
    int ra = test::ref_min_mdd(g, wc, k);
    CHECK(a.yes == (ra >= 0));
    if (a.yes) {
      CHECK(a.witness->size() == ra);
      CHECK(is_mdd_solution({g, wc, k}, *a.witness));
    }
    auto b = oracle_mid({dg, wc, k});
    int rb = test::ref_min_mid(dg, wc, k);
    CHECK(b.yes == (rb >= 0));
    if (b.yes) CHECK(b.witness->size() == rb);
    test::mask u = static_cast<test::mask>(uniform_below(rng, 1u << n)) & static_cast<test::mask>(uniform_below(rng, 1u << n));
    auto c = oracle_annotated_bdd({g, test::from_mask(u), d, k});
    int rc = test::ref_min_bdd(g, d, u, k);
    CHECK(c.yes == (rc >= 0));
    if (c.yes) CHECK(c.witness->size() == rc);
    CHECK(oracle_dominating_set(g, k).yes == test::ref_dominating(g, k));
    CHECK(oracle_independent_set(g, k).yes == test::ref_independent(g, k));
  }
}

TEST_CASE("oracle monotone in k and explored bounded") {
  rng_engine rng(22);
  for (int rep = 0; rep < 400; ++rep) {
    int n = 2 + static_cast<int>(uniform_below(rng, 7));
    auto g = test::sample_undirected(n, 0.5, rng);
    bool prev = false;
    for (int k = 0; k < n; ++k) {
      auto r = oracle_mdd({g, 0, k});
      if (prev) CHECK(r.yes);
      prev = r.yes;
      std::uint64_t bound = 0, c = 1;
      for (int j = 0; j <= k; ++j) {
        bound += c;
        c = c * (n - 1 - j) / (j + 1);
      }
      CHECK(r.explored <= bound);
    }
  }
}

TEST_CASE("oracle cap refuses") {
  oracle_options small{5};
  CHECK_THROWS_AS(oracle_mdd({undirected_graph(6), 0, 1}, small), solver_refusal);
  CHECK_NOTHROW(oracle_mdd({undirected_graph(5), 0, 1}, small));
}

TEST_CASE("sweep enumerators cover their ranges") {
  const std::vector<std::size_t> classes{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(test::iso_classes(n).size() == classes[n - 1]);
  for (int n = 1; n <= 3; ++n) {
    std::size_t seen = 0;
    test::for_each_labeled_digraph(n, [&](const directed_graph&) { ++seen; });
    CHECK(seen == std::size_t(1) << (n * (n - 1)));
  }
}
