// Mutable deletion overlays used by the solvers. They never copy adjacency,
// only alive flags and current degrees, so branching means copying two arrays.
#pragma once

#include <vector>

#include "degdel/graph.hpp"

namespace degdel {

struct live_undirected {
  const undirected_graph* g = nullptr;
  std::vector<char> alive;
  std::vector<int> deg;
  int alive_count = 0;

  live_undirected() = default;
  explicit live_undirected(const undirected_graph& graph) : g(&graph) {
    int n = graph.vertex_count();
    alive.assign(n, 1);
    deg.resize(n);
    for (vertex v = 0; v < n; ++v) deg[v] = graph.degree(v);
    alive_count = n;
  }

  void remove(vertex v) {
    alive[v] = 0;
    --alive_count;
    for (vertex u : g->neighbors(v))
      if (alive[u]) --deg[u];
  }
  void restore(vertex v) {
    for (vertex u : g->neighbors(v))
      if (alive[u]) ++deg[u];
    alive[v] = 1;
    ++alive_count;
  }
  std::vector<vertex> live_neighbors(vertex v) const {
    std::vector<vertex> out;
    for (vertex u : g->neighbors(v))
      if (alive[u]) out.push_back(u);
    return out;
  }
  vertex_set removed() const {
    std::vector<vertex> out;
    for (vertex v = 0; v < static_cast<vertex>(alive.size()); ++v)
      if (!alive[v]) out.push_back(v);
    return vertex_set(std::move(out));
  }
};

// Tracks in-degrees only; removing v lowers the in-degree of its out-neighbours.
struct live_directed {
  const directed_graph* g = nullptr;
  std::vector<char> alive;
  std::vector<int> indeg;
  int alive_count = 0;

  live_directed() = default;
  explicit live_directed(const directed_graph& graph) : g(&graph) {
    int n = graph.vertex_count();
    alive.assign(n, 1);
    indeg.resize(n);
    for (vertex v = 0; v < n; ++v) indeg[v] = graph.in_degree(v);
    alive_count = n;
  }

  void remove(vertex v) {
    alive[v] = 0;
    --alive_count;
    for (vertex u : g->out_neighbors(v))
      if (alive[u]) --indeg[u];
  }
  void restore(vertex v) {
    for (vertex u : g->out_neighbors(v))
      if (alive[u]) ++indeg[u];
    alive[v] = 1;
    ++alive_count;
  }
  vertex_set removed() const {
    std::vector<vertex> out;
    for (vertex v = 0; v < static_cast<vertex>(alive.size()); ++v)
      if (!alive[v]) out.push_back(v);
    return vertex_set(std::move(out));
  }
};

}  // namespace degdel
