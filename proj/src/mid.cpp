#include "degdel/mid.hpp"

#include <algorithm>
#include <numeric>

#include "degdel/feedback.hpp"
#include "degdel/live_graph.hpp"

namespace degdel {

solve_result solve_mid_acyclic(const mid_instance& inst) {
  inst.validate();
  if (!is_acyclic(inst.g)) throw usage_error("solve_mid_acyclic needs an acyclic graph");
  live_directed st(inst.g);
  std::vector<vertex> q;
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (v != inst.wc && st.indeg[v] == 0) q.push_back(v);
  std::vector<vertex> removed;
  while (!q.empty()) {
    vertex v = q.back();
    q.pop_back();
    st.remove(v);
    removed.push_back(v);
    for (vertex u : inst.g.out_neighbors(v))
      if (u != inst.wc && st.alive[u] && st.indeg[u] == 0) q.push_back(u);
  }
  vertex_set m(removed);
  if (m.size() <= inst.k && is_mid_solution(inst, m)) return solve_result::found(m, m.size());
  return solve_result::no(m.size());
}

solve_result solve_mid(const mid_instance& inst, std::optional<int> cap, mid_search_stats* stats) {
  inst.validate();
  const auto& g = inst.g;
  int top = cap ? *cap : greedy_feedback_vertex_set(g).size();
  mid_search_stats local;
  mid_search_stats& s = stats ? *stats : local;
  s = {};
  s.cap = top;
  auto nin = g.in_neighbors(inst.wc);
  int deg = static_cast<int>(nin.size());
  std::vector<char> keep(g.vertex_count(), 0);

  for (int i = 0; i <= top; ++i) {
    if (deg > i + inst.k || i > deg) continue;
    ++s.outer_iterations;
    std::vector<int> idx(i);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ++s.subsets_tried;
      live_directed st(g);
      for (int t : idx) keep[nin[t]] = 1;
      int removed = 0;
      for (vertex x : nin)
        if (!keep[x]) {
          st.remove(x);
          ++removed;
        }
      for (int t : idx) keep[nin[t]] = 0;
      std::vector<vertex> q;
      for (vertex v = 0; v < g.vertex_count(); ++v)
        if (v != inst.wc && st.alive[v] && st.indeg[v] <= i) q.push_back(v);
      while (!q.empty() && removed <= inst.k) {
        vertex v = q.back();
        q.pop_back();
        if (!st.alive[v]) continue;
        st.remove(v);
        ++removed;
        for (vertex u : g.out_neighbors(v))
          if (u != inst.wc && st.alive[u] && st.indeg[u] <= i) q.push_back(u);
      }
      s.vertices_removed += removed;
      if (removed <= inst.k) {
        vertex_set m = st.removed();
        if (is_mid_solution(inst, m)) return solve_result::found(m, s.subsets_tried);
        ++s.verify_rejections;
      }
      // next i-subset in lexicographic order
      int j = i - 1;
      while (j >= 0 && idx[j] == deg - i + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int t = j + 1; t < i; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return solve_result::no(s.subsets_tried);
}

bool min_indegree_fvs_bound_holds(const directed_graph& g) {
  if (g.vertex_count() == 0) return true;
  int dmin = g.in_degree(0);
  for (vertex v = 1; v < g.vertex_count(); ++v) dmin = std::min(dmin, g.in_degree(v));
  auto f = min_feedback_vertex_set(g);
  return f && dmin <= f->size();
}

}  // namespace degdel
