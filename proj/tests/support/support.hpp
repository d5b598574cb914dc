// Shared helpers for the test binaries: small-graph enumeration, seeded
// sampling and bitmask brute force written independently of the library.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "degdel/graph.hpp"
#include "degdel/generators.hpp"

namespace degdel::test {

// One representative per isomorphism class of simple graphs on n <= 7
// vertices. Counts: 1, 2, 4, 11, 34, 156, 1044.
const std::vector<undirected_graph>& iso_classes(int n);

// Every labeled digraph on n <= 5 vertices, by arc bitmask.
void for_each_labeled_digraph(int n, const std::function<void(const directed_graph&)>& f);

// Each pair (or ordered pair) present independently with probability p.
undirected_graph sample_undirected(int n, double p, rng_engine& rng);
directed_graph sample_directed(int n, double p, rng_engine& rng);
// Random forest over n vertices (spanning tree with each edge kept w.p. keep).
undirected_graph sample_forest(int n, double keep, rng_engine& rng);

// Bitmask references. Vertex v is bit v; graphs must have n <= 20.
using mask = std::uint32_t;
std::vector<mask> adjacency(const undirected_graph& g);
std::vector<mask> in_adjacency(const directed_graph& g);

// Smallest deletion set (ascending popcount, then value), or -1.
int ref_min_mid(const directed_graph& g, vertex wc, int k);
int ref_min_mdd(const undirected_graph& g, vertex wc, int k);
int ref_min_bdd(const undirected_graph& g, int d, mask unremovable, int k);
int ref_min_annotated_mdd(const undirected_graph& g, mask vf, vertex wc, int i, int k);
bool ref_dominating(const undirected_graph& g, int k);
bool ref_independent(const undirected_graph& g, int k);
bool ref_hitting(int d, const std::vector<std::vector<int>>& sets, int k);
// Exact sizes by subset enumeration.
int ref_fvs(const undirected_graph& g, mask forbidden = 0);
int ref_fvs(const directed_graph& g);
int ref_fas(const directed_graph& g);

mask to_mask(const vertex_set& s);
vertex_set from_mask(mask m);

std::string testdata(const std::string& name);

}  // namespace degdel::test
