// Feedback edge, vertex and arc sets.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degdel/graph.hpp"

namespace degdel {

struct feedback_edge_set {
  std::vector<edge> edges;  // (u, v) with u < v, sorted
  int size() const { return static_cast<int>(edges.size()); }
};

struct feedback_vertex_set {
  vertex_set vertices;
  int size() const { return vertices.size(); }
};

struct feedback_arc_set {
  std::vector<edge> arcs;  // sorted
  int size() const { return static_cast<int>(arcs.size()); }
};

// Edges not in a DFS spanning forest; size is m - n + c.
feedback_edge_set min_feedback_edge_set(const undirected_graph& g);
int feedback_edge_number(const undirected_graph& g);

// Exact minimum FVS avoiding `forbidden`, lexicographically smallest among
// minimum ones. nullopt when no such set exists (a cycle inside `forbidden`).
// Exponential; throws usage_error when the number of cycle vertices exceeds
// max_candidates.
std::optional<feedback_vertex_set> min_feedback_vertex_set(const undirected_graph& g,
                                                           const vertex_set& forbidden = {},
                                                           int max_candidates = 40);
std::optional<feedback_vertex_set> min_feedback_vertex_set(const directed_graph& g,
                                                           const vertex_set& forbidden = {},
                                                           int max_candidates = 40);

// Minimum FAS, lexicographically smallest among minimum ones.
feedback_arc_set min_feedback_arc_set(const directed_graph& g, int max_candidates = 64);
// Size only, via a subset DP over vertex orders of each strong component.
int feedback_arc_number(const directed_graph& g, int max_component = 22);

// Repeatedly delete the cycle vertex of largest degree (ties: smallest id).
feedback_vertex_set greedy_feedback_vertex_set(const directed_graph& g);
feedback_vertex_set greedy_feedback_vertex_set(const undirected_graph& g);

bool verify_feedback_set(const undirected_graph& g, const feedback_edge_set& f);
bool verify_feedback_set(const undirected_graph& g, const feedback_vertex_set& f);
bool verify_feedback_set(const directed_graph& g, const feedback_vertex_set& f);
bool verify_feedback_set(const directed_graph& g, const feedback_arc_set& f);

// Vertices lying on at least one cycle.
std::vector<vertex> cycle_vertices(const undirected_graph& g);
std::vector<vertex> cycle_vertices(const directed_graph& g);

}  // namespace degdel
