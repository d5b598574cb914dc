#include "degdel/mdd.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "degdel/annotated_mdd.hpp"
#include "degdel/live_graph.hpp"
#include "degdel/oracles.hpp"

namespace degdel {

namespace {

// Delete every alive vertex other than wc whose degree is <= t, to a fixed
// point. Returns false (state partially updated) if a vertex in `protect` would
// be deleted or more than `budget` deletions are needed.
bool cascade(live_undirected& st, vertex wc, int t, const std::vector<char>* protect, int budget, int& used) {
  std::vector<vertex> q;
  for (vertex v = 0; v < static_cast<vertex>(st.alive.size()); ++v)
    if (v != wc && st.alive[v] && st.deg[v] <= t) q.push_back(v);
  while (!q.empty()) {
    vertex v = q.back();
    q.pop_back();
    if (!st.alive[v]) continue;
    if (protect && (*protect)[v]) return false;
    if (++used > budget) return false;
    st.remove(v);
    for (vertex u : st.g->neighbors(v))
      if (u != wc && st.alive[u] && st.deg[u] <= t) q.push_back(u);
  }
  return true;
}

// Deletions (beyond those already in st) that leave wc with degree 0 or 1.
std::optional<std::vector<vertex>> low_degree_on(const live_undirected& base, vertex wc, int k) {
  if (k < 0) return std::nullopt;
  auto nb = base.live_neighbors(wc);
  auto diff = [&](const live_undirected& st) {
    std::vector<vertex> out;
    for (vertex v = 0; v < static_cast<vertex>(st.alive.size()); ++v)
      if (base.alive[v] && !st.alive[v]) out.push_back(v);
    return out;
  };
  if (static_cast<int>(nb.size()) <= k) {
    live_undirected st = base;
    for (vertex x : nb) st.remove(x);
    int used = static_cast<int>(nb.size());
    if (cascade(st, wc, 0, nullptr, k, used)) return diff(st);
  }
  if (!nb.empty() && static_cast<int>(nb.size()) - 1 <= k) {
    std::vector<char> protect(base.alive.size(), 0);
    for (vertex y : nb) {
      live_undirected st = base;
      for (vertex x : nb)
        if (x != y) st.remove(x);
      int used = static_cast<int>(nb.size()) - 1;
      protect[y] = 1;
      bool ok = cascade(st, wc, 1, &protect, k, used);
      protect[y] = 0;
      if (ok) return diff(st);
    }
  }
  return std::nullopt;
}

enum class kstate { open, yes, no };

// Kernelise in place. On yes, st holds the full solution as its deleted set.
kstate kernelize_on(live_undirected& st, vertex wc, int& k, cascade_order order, std::vector<vertex>* trace) {
  if (auto extra = low_degree_on(st, wc, k)) {
    for (vertex v : *extra) {
      st.remove(v);
      if (trace) trace->push_back(v);
    }
    k -= static_cast<int>(extra->size());
    return kstate::yes;
  }
  std::set<vertex> ready;
  for (vertex v = 0; v < static_cast<vertex>(st.alive.size()); ++v)
    if (v != wc && st.alive[v] && st.deg[v] <= 2) ready.insert(v);
  while (!ready.empty() && k >= 0) {
    vertex v = order == cascade_order::ascending ? *ready.begin() : *ready.rbegin();
    ready.erase(v);
    st.remove(v);
    --k;
    if (trace) trace->push_back(v);
    for (vertex u : st.g->neighbors(v))
      if (u != wc && st.alive[u] && st.deg[u] <= 2) ready.insert(u);
  }
  if (k < 0 || st.deg[wc] < 2) return kstate::no;
  return kstate::open;
}

void check_fes(const mdd_instance& inst, const feedback_edge_set& fes) {
  if (!verify_feedback_set(inst.g, fes)) throw usage_error("not a feedback edge set of the graph");
}

}  // namespace

std::optional<vertex_set> check_low_degree_solution(const mdd_instance& inst) {
  inst.validate();
  live_undirected st(inst.g);
  auto extra = low_degree_on(st, inst.wc, inst.k);
  if (!extra) return std::nullopt;
  return vertex_set(*extra);
}

kernel_output remove_low_degree(const mdd_instance& inst, cascade_order order) {
  inst.validate();
  live_undirected st(inst.g);
  int k = inst.k;
  kernel_output out;
  kstate r = kernelize_on(st, inst.wc, k, order, &out.removed);
  vertex_set gone = st.removed();
  auto ind = delete_vertices(inst.g, gone);
  out.reduced = mdd_instance{std::move(ind.graph), ind.old_to_new[inst.wc], k};
  out.new_to_old = std::move(ind.new_to_old);
  if (r == kstate::yes) {
    // collapse to the lone wc with nothing left to spend
    out.resolved = true;
    out.witness = gone;
    out.reduced = mdd_instance{undirected_graph(1), 0, 0};
    out.new_to_old = {inst.wc};
  } else if (r == kstate::no) {
    out.resolved = false;
  }
  return out;
}

bool kernel_size_bound_holds(const kernel_output& out) {
  if (out.resolved) return true;
  return out.reduced.g.vertex_count() <= 2 * feedback_edge_number(out.reduced.g);
}

solve_result mdd_search(const mdd_instance& inst, const feedback_edge_set& fes, mdd_search_stats* stats) {
  inst.validate();
  check_fes(inst, fes);
  mdd_search_stats local;
  mdd_search_stats& s = stats ? *stats : local;
  s = {};
  const vertex wc = inst.wc;
  live_undirected st(inst.g);
  int k = inst.k;
  kstate r = kernelize_on(st, wc, k, cascade_order::ascending, nullptr);
  s.kernel_n = st.alive_count;
  s.kernel_m = 0;
  for (auto [u, v] : inst.g.edges())
    if (st.alive[u] && st.alive[v]) ++s.kernel_m;
  if (r != kstate::open) {
    s.resolved_by_kernel = r == kstate::yes;
    if (r == kstate::no) return solve_result::no();
    vertex_set w = st.removed();
    if (!is_mdd_solution(inst, w)) throw std::logic_error("kernel witness failed verification");
    return solve_result::found(w);
  }

  std::vector<vertex> ne;
  for (auto [u, v] : fes.edges) {
    if (!st.alive[u] || !st.alive[v]) continue;
    if (u == wc) ne.push_back(v);
    if (v == wc) ne.push_back(u);
  }
  std::sort(ne.begin(), ne.end());
  std::vector<char> in_ne(inst.g.vertex_count(), 0), protect(inst.g.vertex_count(), 0);
  for (vertex x : ne) in_ne[x] = 1;
  const int e = static_cast<int>(ne.size());

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
    live_undirected s1 = st;
    int k1 = k;
    for (int b = 0; b < e; ++b)
      if (mask >> b & 1) {
        s1.remove(ne[b]);
        --k1;
      }
    if (k1 < 0) continue;
    kstate r1 = kernelize_on(s1, wc, k1, cascade_order::ascending, nullptr);
    if (r1 == kstate::yes) {
      vertex_set w = s1.removed();
      if (is_mdd_solution(inst, w)) return solve_result::found(w, s.branches);
      continue;
    }
    if (r1 == kstate::no) continue;
    bool lost = false;
    for (int b = 0; b < e; ++b)
      if (!(mask >> b & 1) && !s1.alive[ne[b]]) lost = true;
    if (lost) continue;
    std::vector<vertex> rest;
    for (vertex x : s1.live_neighbors(wc))
      if (!in_ne[x]) rest.push_back(x);
    const int rn = static_cast<int>(rest.size());
    for (std::uint64_t m2 = 0; m2 < (std::uint64_t(1) << rn); ++m2) {
      ++s.branches;
      if (std::popcount(m2) > k1) continue;
      live_undirected s2 = s1;
      int used = 0;
      for (int b = 0; b < rn; ++b)
        if (m2 >> b & 1) {
          s2.remove(rest[b]);
          ++used;
        }
      for (vertex x : s2.live_neighbors(wc)) protect[x] = 1;
      // deg(wc) is fixed once the neighbour choice is made
      bool ok = cascade(s2, wc, s2.deg[wc], &protect, k1, used);
      for (vertex x : s1.live_neighbors(wc)) protect[x] = 0;
      if (!ok) continue;
      vertex_set w = s2.removed();
      if (is_mdd_solution(inst, w)) return solve_result::found(w, s.branches);
    }
  }
  return solve_result::no(s.branches);
}

solve_result mdd_search(const mdd_instance& inst, mdd_search_stats* stats) {
  return mdd_search(inst, min_feedback_edge_set(inst.g), stats);
}

solve_result mdd_solv(const mdd_instance& inst, const feedback_vertex_set& fvs, annotated_backend backend) {
  inst.validate();
  const auto& g = inst.g;
  if (fvs.vertices.contains(inst.wc)) throw usage_error("feedback vertex set must not contain wc");
  if (!verify_feedback_set(g, fvs)) throw usage_error("not a feedback vertex set of the graph");
  const auto& vf = fvs.vertices.ids();
  const int f = static_cast<int>(vf.size());
  if (f > 30) throw solver_refusal("feedback vertex set too large for mdd_solv");
  std::uint64_t calls = 0;
  std::vector<char> protect(g.vertex_count(), 0);

  for (int size = 0; size <= std::min(f, inst.k); ++size) {
    // subsets of vf of this size, lexicographic
    std::vector<int> idx(size);
    for (int t = 0; t < size; ++t) idx[t] = t;
    while (true) {
      live_undirected s1(g);
      std::vector<char> chosen(f, 0);
      for (int t : idx) {
        s1.remove(vf[t]);
        chosen[t] = 1;
      }
      std::vector<vertex> keep_f;
      for (int t = 0; t < f; ++t)
        if (!chosen[t]) keep_f.push_back(vf[t]);
      const int k1 = inst.k - size;
      for (int i = 0; i <= f; ++i) {
        live_undirected s2 = s1;
        for (vertex v : keep_f) protect[v] = 1;
        int used = 0;
        bool ok = cascade(s2, inst.wc, i, &protect, k1, used);
        for (vertex v : keep_f) protect[v] = 0;
        if (!ok || s2.deg[inst.wc] < i) continue;
        vertex_set gone = s2.removed();
        auto ind = delete_vertices(g, gone);
        std::vector<vertex> vf2;
        for (vertex v : keep_f) vf2.push_back(ind.old_to_new[v]);
        annotated_mdd_instance sub{std::move(ind.graph), vertex_set(vf2), ind.old_to_new[inst.wc], k1 - used, i};
        ++calls;
        solve_result r;
        switch (backend) {
          case annotated_backend::dp: r = annotated_mdd_dp(sub); break;
          case annotated_backend::ilp: r = annotated_mdd_ilp(sub).result; break;
          case annotated_backend::xp: r = annotated_mdd_xp(sub); break;
          case annotated_backend::oracle: r = oracle_annotated_mdd(sub, {1 << 20}); break;
        }
        if (!r.yes) continue;
        std::vector<vertex> w(gone.begin(), gone.end());
        for (vertex v : *r.witness) w.push_back(ind.new_to_old[v]);
        vertex_set ws(w);
        if (is_mdd_solution(inst, ws)) return solve_result::found(ws, calls);
      }
      int j = size - 1;
      while (j >= 0 && idx[j] == f - size + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int t = j + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return solve_result::no(calls);
}

}  // namespace degdel
