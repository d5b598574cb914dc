#include "degdel/feedback.hpp"

#include <bit>
#include <algorithm>
#include <numeric>

namespace degdel {

feedback_edge_set min_feedback_edge_set(const undirected_graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<edge> tree;
  std::vector<vertex> stack;
  for (vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      for (vertex v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          tree.emplace_back(std::min(u, v), std::max(u, v));
          stack.push_back(v);
        }
    }
  }
  std::sort(tree.begin(), tree.end());
  feedback_edge_set f;
  for (auto e : g.edges())
    if (!std::binary_search(tree.begin(), tree.end(), e)) f.edges.push_back(e);
  return f;
}

int feedback_edge_number(const undirected_graph& g) {
  int c = 0;
  connected_components(g, &c);
  return g.edge_count() - g.vertex_count() + c;
}

namespace {

// acyclicity of g minus a marked vertex set
bool acyclic_without(const undirected_graph& g, const std::vector<char>& gone) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (vertex u = 0; u < n; ++u) {
    if (gone[u]) continue;
    for (vertex v : g.neighbors(u)) {
      if (v < u || gone[v]) continue;
      int a = find(u), b = find(v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

bool acyclic_without(const directed_graph& g, const std::vector<char>& gone) {
  int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<vertex> q;
  int live = 0;
  for (vertex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    ++live;
    for (vertex u : g.in_neighbors(v))
      if (!gone[u]) ++indeg[v];
    if (indeg[v] == 0) q.push_back(v);
  }
  int seen = 0;
  while (!q.empty()) {
    vertex u = q.back();
    q.pop_back();
    ++seen;
    for (vertex v : g.out_neighbors(u))
      if (!gone[v] && --indeg[v] == 0) q.push_back(v);
  }
  return seen == live;
}

// Visit size-s subsets of [0, m) in lexicographic order until f returns true.
template <class F>
bool for_each_combination(int m, int s, F&& f) {
  if (s > m) return false;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    int j = s - 1;
    while (j >= 0 && idx[j] == m - s + j) --j;
    if (j < 0) return false;
    ++idx[j];
    for (int t = j + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
  }
}

template <class G>
std::optional<feedback_vertex_set> exact_fvs(const G& g, const vertex_set& forbidden, int max_candidates) {
  int n = g.vertex_count();
  for (vertex v : forbidden)
    if (!g.valid(v)) throw usage_error("forbidden vertex out of range");
  std::vector<vertex> cand;
  for (vertex v : cycle_vertices(g))
    if (!forbidden.contains(v)) cand.push_back(v);
  std::vector<char> gone(n, 0);
  for (vertex v : cand) gone[v] = 1;
  if (!acyclic_without(g, gone)) return std::nullopt;
  if (static_cast<int>(cand.size()) > max_candidates)
    throw usage_error("exact FVS refused: " + std::to_string(cand.size()) + " cycle vertices");
  std::fill(gone.begin(), gone.end(), 0);
  int m = static_cast<int>(cand.size());
  for (int s = 0; s <= m; ++s) {
    std::vector<vertex> best;
    bool found = for_each_combination(m, s, [&](const std::vector<int>& idx) {
      for (int i : idx) gone[cand[i]] = 1;
      bool ok = acyclic_without(g, gone);
      for (int i : idx) gone[cand[i]] = 0;
      if (ok)
        for (int i : idx) best.push_back(cand[i]);
      return ok;
    });
    if (found) return feedback_vertex_set{vertex_set(best)};
  }
  return std::nullopt;  // unreachable: all candidates removed is acyclic
}

// Bridges via iterative lowpoint DFS; returns per-vertex flag "has a
// non-bridge incident edge".
std::vector<char> on_cycle_flags(const undirected_graph& g) {
  int n = g.vertex_count();
  std::vector<int> tin(n, -1), low(n, 0);
  std::vector<char> flag(n, 0);
  int timer = 0;
  struct frame {
    vertex u, parent;
    int pos;
  };
  std::vector<frame> st;
  for (vertex s = 0; s < n; ++s) {
    if (tin[s] >= 0) continue;
    st.push_back({s, -1, 0});
    tin[s] = low[s] = timer++;
    while (!st.empty()) {
      frame& f = st.back();
      auto nb = g.neighbors(f.u);
      if (f.pos < static_cast<int>(nb.size())) {
        vertex v = nb[f.pos++];
        if (v == f.parent) continue;
        if (tin[v] >= 0) {
          low[f.u] = std::min(low[f.u], tin[v]);
          // back edge: both endpoints on a cycle
          flag[f.u] = flag[v] = 1;
        } else {
          tin[v] = low[v] = timer++;
          st.push_back({v, f.u, 0});
        }
        continue;
      }
      vertex u = f.u, p = f.parent;
      st.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[u]);
        if (low[u] <= tin[p]) flag[u] = flag[p] = 1;  // tree edge p-u not a bridge
      }
    }
  }
  return flag;
}

}  // namespace

std::vector<vertex> cycle_vertices(const undirected_graph& g) {
  auto flag = on_cycle_flags(g);
  std::vector<vertex> out;
  for (vertex v = 0; v < g.vertex_count(); ++v)
    if (flag[v]) out.push_back(v);
  return out;
}

std::vector<vertex> cycle_vertices(const directed_graph& g) {
  int c = 0;
  auto comp = strongly_connected_components(g, &c);
  std::vector<int> size(c, 0);
  for (int x : comp) ++size[x];
  std::vector<vertex> out;
  for (vertex v = 0; v < g.vertex_count(); ++v)
    if (size[comp[v]] >= 2) out.push_back(v);
  return out;
}

std::optional<feedback_vertex_set> min_feedback_vertex_set(const undirected_graph& g, const vertex_set& forbidden,
                                                           int max_candidates) {
  return exact_fvs(g, forbidden, max_candidates);
}

std::optional<feedback_vertex_set> min_feedback_vertex_set(const directed_graph& g, const vertex_set& forbidden,
                                                           int max_candidates) {
  return exact_fvs(g, forbidden, max_candidates);
}

int feedback_arc_number(const directed_graph& g, int max_component) {
  int c = 0;
  auto comp = strongly_connected_components(g, &c);
  std::vector<std::vector<vertex>> members(c);
  for (vertex v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);
  int total = 0;
  for (auto& w : members) {
    int k = static_cast<int>(w.size());
    if (k < 2) continue;
    if (k > max_component) throw usage_error("strong component too large for exact FAS");
    std::vector<std::uint32_t> outmask(k, 0);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (g.has_arc(w[a], w[b])) outmask[a] |= 1u << b;
    std::vector<int> f(std::size_t(1) << k, 0);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      int best = 1 << 30;
      for (int v = 0; v < k; ++v) {
        if (!(mask >> v & 1)) continue;
        std::uint32_t rest = mask & ~(1u << v);
        best = std::min(best, f[rest] + std::popcount(outmask[v] & rest));
      }
      f[mask] = best;
    }
    total += f[(std::size_t(1) << k) - 1];
  }
  return total;
}

feedback_arc_set min_feedback_arc_set(const directed_graph& g, int max_candidates) {
  int c = 0;
  auto comp = strongly_connected_components(g, &c);
  std::vector<edge> cand;
  for (auto [u, v] : g.arcs())
    if (comp[u] == comp[v]) cand.push_back({u, v});
  if (static_cast<int>(cand.size()) > max_candidates) throw usage_error("exact FAS refused: too many cycle arcs");
  int target = feedback_arc_number(g);
  auto arcs = g.arcs();
  std::vector<edge> best;
  int m = static_cast<int>(cand.size());
  for_each_combination(m, target, [&](const std::vector<int>& idx) {
    std::vector<edge> del;
    for (int i : idx) del.push_back(cand[i]);
    if (!is_acyclic(remove_arcs(g, del))) return false;
    best = del;
    return true;
  });
  return {best};
}

feedback_vertex_set greedy_feedback_vertex_set(const directed_graph& g) {
  int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  std::vector<vertex> picked;
  std::vector<edge> arcs = g.arcs();
  while (true) {
    std::vector<edge> live;
    for (auto [u, v] : arcs)
      if (!gone[u] && !gone[v]) live.push_back({u, v});
    directed_graph h(n, live);
    auto cyc = cycle_vertices(h);
    if (cyc.empty()) break;
    vertex best = cyc[0];
    int best_deg = -1;
    for (vertex v : cyc) {
      int d = h.in_degree(v) + h.out_degree(v);
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    }
    gone[best] = 1;
    picked.push_back(best);
  }
  return {vertex_set(picked)};
}

feedback_vertex_set greedy_feedback_vertex_set(const undirected_graph& g) {
  int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  std::vector<vertex> picked;
  std::vector<edge> es = g.edges();
  while (true) {
    std::vector<edge> live;
    for (auto [u, v] : es)
      if (!gone[u] && !gone[v]) live.push_back({u, v});
    undirected_graph h(n, live);
    auto cyc = cycle_vertices(h);
    if (cyc.empty()) break;
    vertex best = cyc[0];
    for (vertex v : cyc)
      if (h.degree(v) > h.degree(best)) best = v;
    gone[best] = 1;
    picked.push_back(best);
  }
  return {vertex_set(picked)};
}

bool verify_feedback_set(const undirected_graph& g, const feedback_edge_set& f) {
  for (auto [u, v] : f.edges)
    if (!g.has_edge(u, v)) return false;
  return is_acyclic(remove_edges(g, f.edges));
}

bool verify_feedback_set(const undirected_graph& g, const feedback_vertex_set& f) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (vertex v : f.vertices) {
    if (!g.valid(v)) return false;
    gone[v] = 1;
  }
  return acyclic_without(g, gone);
}

bool verify_feedback_set(const directed_graph& g, const feedback_vertex_set& f) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (vertex v : f.vertices) {
    if (!g.valid(v)) return false;
    gone[v] = 1;
  }
  return acyclic_without(g, gone);
}

bool verify_feedback_set(const directed_graph& g, const feedback_arc_set& f) {
  for (auto [u, v] : f.arcs)
    if (!g.has_arc(u, v)) return false;
  return is_acyclic(remove_arcs(g, f.arcs));
}

}  // namespace degdel
