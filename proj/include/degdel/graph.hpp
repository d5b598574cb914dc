// Simple graphs over vertex ids 0..n-1.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degdel {

using vertex = std::int32_t;
using edge = std::pair<vertex, vertex>;

// Raised when a caller violates a documented precondition.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sorted, duplicate-free list of vertex ids.
class vertex_set {
 public:
  vertex_set() = default;
  explicit vertex_set(std::vector<vertex> ids);
  vertex_set(std::initializer_list<vertex> ids);

  bool contains(vertex v) const;
  void insert(vertex v);
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<vertex>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  bool operator==(const vertex_set&) const = default;
  auto operator<=>(const vertex_set&) const = default;

 private:
  std::vector<vertex> ids_;
};

vertex_set set_union(const vertex_set& a, const vertex_set& b);
std::string to_string(const vertex_set& s);  // space separated, 0-based

class undirected_graph {
 public:
  undirected_graph() = default;
  explicit undirected_graph(int n);
  // Throws usage_error on out-of-range ids, self-loops or duplicate edges.
  undirected_graph(int n, std::span<const edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  std::span<const vertex> neighbors(vertex v) const;
  int degree(vertex v) const;
  bool has_edge(vertex u, vertex v) const;
  // Each edge once as (u, v) with u < v, sorted.
  std::vector<edge> edges() const;
  bool valid(vertex v) const { return v >= 0 && v < vertex_count(); }

 private:
  std::vector<std::vector<vertex>> adj_;
  int m_ = 0;
};

class directed_graph {
 public:
  directed_graph() = default;
  explicit directed_graph(int n);
  // Arcs are (tail, head). Throws usage_error on loops or repeated arcs.
  directed_graph(int n, std::span<const edge> arcs);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  int arc_count() const { return m_; }
  std::span<const vertex> out_neighbors(vertex v) const;
  std::span<const vertex> in_neighbors(vertex v) const;
  int in_degree(vertex v) const;
  int out_degree(vertex v) const;
  bool has_arc(vertex u, vertex v) const;
  std::vector<edge> arcs() const;
  bool valid(vertex v) const { return v >= 0 && v < vertex_count(); }

 private:
  std::vector<std::vector<vertex>> out_, in_;
  int m_ = 0;
};

// Induced subgraph on the complement of a deleted set. Surviving vertices keep
// their relative order.
template <class G>
struct induced_result {
  G graph;
  std::vector<vertex> old_to_new;  // -1 for deleted vertices
  std::vector<vertex> new_to_old;
};

induced_result<undirected_graph> delete_vertices(const undirected_graph& g, const vertex_set& s);
induced_result<directed_graph> delete_vertices(const directed_graph& g, const vertex_set& s);

undirected_graph remove_edges(const undirected_graph& g, std::span<const edge> del);
directed_graph remove_arcs(const directed_graph& g, std::span<const edge> del);

bool is_acyclic(const undirected_graph& g);
bool is_acyclic(const directed_graph& g);

// Component id per vertex, numbered by smallest member.
std::vector<int> connected_components(const undirected_graph& g, int* count = nullptr);
std::vector<int> strongly_connected_components(const directed_graph& g, int* count = nullptr);

// Underlying simple undirected graph (antiparallel arcs collapse).
undirected_graph underlying(const directed_graph& g);

}  // namespace degdel
