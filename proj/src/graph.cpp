#include "degdel/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace degdel {

vertex_set::vertex_set(std::vector<vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

vertex_set::vertex_set(std::initializer_list<vertex> ids) : vertex_set(std::vector<vertex>(ids)) {}

bool vertex_set::contains(vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void vertex_set::insert(vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

vertex_set set_union(const vertex_set& a, const vertex_set& b) {
  std::vector<vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return vertex_set(std::move(out));
}

std::string to_string(const vertex_set& s) {
  std::ostringstream os;
  bool first = true;
  for (vertex v : s) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

static void check_vertex(int n, vertex v) {
  if (v < 0 || v >= n) throw usage_error("vertex id " + std::to_string(v) + " out of range");
}

undirected_graph::undirected_graph(int n) {
  if (n < 0) throw usage_error("negative vertex count");
  adj_.resize(n);
}

undirected_graph::undirected_graph(int n, std::span<const edge> edges) : undirected_graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw usage_error("self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw usage_error("duplicate edge");
  }
  m_ = static_cast<int>(edges.size());
}

std::span<const vertex> undirected_graph::neighbors(vertex v) const {
  check_vertex(vertex_count(), v);
  return adj_[v];
}

int undirected_graph::degree(vertex v) const {
  check_vertex(vertex_count(), v);
  return static_cast<int>(adj_[v].size());
}

bool undirected_graph::has_edge(vertex u, vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<edge> undirected_graph::edges() const {
  std::vector<edge> out;
  out.reserve(m_);
  for (vertex u = 0; u < vertex_count(); ++u)
    for (vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

directed_graph::directed_graph(int n) {
  if (n < 0) throw usage_error("negative vertex count");
  out_.resize(n);
  in_.resize(n);
}

directed_graph::directed_graph(int n, std::span<const edge> arcs) : directed_graph(n) {
  for (auto [u, v] : arcs) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw usage_error("self-loop at " + std::to_string(u));
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& a : out_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw usage_error("duplicate arc");
  }
  for (auto& a : in_) std::sort(a.begin(), a.end());
  m_ = static_cast<int>(arcs.size());
}

std::span<const vertex> directed_graph::out_neighbors(vertex v) const {
  check_vertex(vertex_count(), v);
  return out_[v];
}

std::span<const vertex> directed_graph::in_neighbors(vertex v) const {
  check_vertex(vertex_count(), v);
  return in_[v];
}

int directed_graph::in_degree(vertex v) const { return static_cast<int>(in_neighbors(v).size()); }
int directed_graph::out_degree(vertex v) const { return static_cast<int>(out_neighbors(v).size()); }

bool directed_graph::has_arc(vertex u, vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<edge> directed_graph::arcs() const {
  std::vector<edge> out;
  out.reserve(m_);
  for (vertex u = 0; u < vertex_count(); ++u)
    for (vertex v : out_[u]) out.emplace_back(u, v);
  return out;
}

template <class G>
static induced_result<G> make_induced(int n, const vertex_set& s, const std::vector<edge>& all) {
  induced_result<G> r;
  r.old_to_new.assign(n, -1);
  for (vertex v : s) check_vertex(n, v);
  for (vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    r.old_to_new[v] = static_cast<vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  std::vector<edge> kept;
  for (auto [u, v] : all)
    if (r.old_to_new[u] >= 0 && r.old_to_new[v] >= 0) kept.emplace_back(r.old_to_new[u], r.old_to_new[v]);
  r.graph = G(static_cast<int>(r.new_to_old.size()), kept);
  return r;
}

induced_result<undirected_graph> delete_vertices(const undirected_graph& g, const vertex_set& s) {
  return make_induced<undirected_graph>(g.vertex_count(), s, g.edges());
}

induced_result<directed_graph> delete_vertices(const directed_graph& g, const vertex_set& s) {
  return make_induced<directed_graph>(g.vertex_count(), s, g.arcs());
}

undirected_graph remove_edges(const undirected_graph& g, std::span<const edge> del) {
  std::vector<edge> d;
  for (auto [u, v] : del) {
    if (!g.has_edge(u, v)) throw usage_error("edge not in graph");
    d.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(d.begin(), d.end());
  std::vector<edge> kept;
  for (auto e : g.edges())
    if (!std::binary_search(d.begin(), d.end(), e)) kept.push_back(e);
  return undirected_graph(g.vertex_count(), kept);
}

directed_graph remove_arcs(const directed_graph& g, std::span<const edge> del) {
  std::vector<edge> d(del.begin(), del.end());
  for (auto [u, v] : d)
    if (!g.has_arc(u, v)) throw usage_error("arc not in graph");
  std::sort(d.begin(), d.end());
  std::vector<edge> kept;
  for (auto e : g.arcs())
    if (!std::binary_search(d.begin(), d.end(), e)) kept.push_back(e);
  return directed_graph(g.vertex_count(), kept);
}

std::vector<int> connected_components(const undirected_graph& g, int* count) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<vertex> stack;
  for (vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      for (vertex v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_acyclic(const undirected_graph& g) {
  int c = 0;
  connected_components(g, &c);
  return g.edge_count() == g.vertex_count() - c;
}

bool is_acyclic(const directed_graph& g) {
  int n = g.vertex_count();
  std::vector<int> indeg(n);
  std::vector<vertex> q;
  for (vertex v = 0; v < n; ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) q.push_back(v);
  }
  int seen = 0;
  while (!q.empty()) {
    vertex u = q.back();
    q.pop_back();
    ++seen;
    for (vertex v : g.out_neighbors(u))
      if (--indeg[v] == 0) q.push_back(v);
  }
  return seen == n;
}

// Iterative Tarjan.
std::vector<int> strongly_connected_components(const directed_graph& g, int* count) {
  int n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0), raw(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<vertex> stack;
  std::vector<std::pair<vertex, int>> call;
  int next = 0, c = 0;
  for (vertex s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [u, pos] = call.back();
      if (pos == 0) {
        index[u] = low[u] = next++;
        stack.push_back(u);
        on_stack[u] = 1;
      }
      auto out = g.out_neighbors(u);
      if (pos < static_cast<int>(out.size())) {
        vertex v = out[pos++];
        if (index[v] < 0) {
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw[w] = c;
        } while (w != u);
        ++c;
      }
      vertex done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  // renumber by smallest member
  std::vector<int> remap(c, -1), comp(n);
  int k = 0;
  for (vertex v = 0; v < n; ++v) {
    if (remap[raw[v]] < 0) remap[raw[v]] = k++;
    comp[v] = remap[raw[v]];
  }
  if (count) *count = c;
  return comp;
}

undirected_graph underlying(const directed_graph& g) {
  std::vector<edge> es;
  for (auto [u, v] : g.arcs())
    if (u < v || !g.has_arc(v, u)) es.emplace_back(std::min(u, v), std::max(u, v));
  return undirected_graph(g.vertex_count(), es);
}

}  // namespace degdel
