#include "degdel/bdd.hpp"

#include <algorithm>

namespace degdel {

bdd_forest_state::bdd_forest_state(const annotated_bdd_instance& inst, root_rule rule) : inst_(inst) {
  inst.validate();
  const auto& g = inst.g;
  if (!is_acyclic(g)) throw usage_error("forest solver needs an acyclic graph");
  int n = g.vertex_count();
  parent_.assign(n, -1);
  depth_.assign(n, -1);
  deg_.resize(n);
  alive_.assign(n, 1);
  marked_.assign(n, 0);
  done_.assign(n, 0);
  for (vertex v = 0; v < n; ++v) deg_[v] = g.degree(v);
  std::vector<vertex> roots;
  for (vertex s = 0; s < n; ++s) roots.push_back(rule == root_rule::smallest_id ? s : n - 1 - s);
  std::vector<vertex> q;
  for (vertex r : roots) {
    if (depth_[r] >= 0) continue;
    depth_[r] = 0;
    q.assign(1, r);
    for (std::size_t h = 0; h < q.size(); ++h) {
      vertex u = q[h];
      for (vertex v : g.neighbors(u))
        if (depth_[v] < 0) {
          depth_[v] = depth_[u] + 1;
          parent_[v] = u;
          q.push_back(v);
        }
    }
  }
}

vertex bdd_forest_state::next() const {
  vertex best = -1;
  for (vertex v = 0; v < static_cast<vertex>(alive_.size()); ++v) {
    if (!alive_[v] || done_[v]) continue;
    if (best < 0 || depth_[v] > depth_[best] || (depth_[v] == depth_[best] && deg_[v] > deg_[best])) best = v;
  }
  return best;
}

void bdd_forest_state::remove(vertex v) {
  alive_[v] = 0;
  done_[v] = 1;
  for (vertex u : inst_.g.neighbors(v))
    if (alive_[u]) --deg_[u];
}

vertex bdd_forest_state::live_parent(vertex v) const {
  vertex p = parent_[v];
  return p >= 0 && alive_[p] ? p : -1;
}

vertex_set bdd_forest_state::removed_set() const {
  std::vector<vertex> out;
  for (vertex v = 0; v < static_cast<vertex>(alive_.size()); ++v)
    if (!alive_[v]) out.push_back(v);
  return vertex_set(out);
}

step_outcome bdd_forest_state::decision_step(vertex x) {
  if (!alive_[x] || done_[x]) throw usage_error("vertex already handled");
  const int d = inst_.d;
  const auto unrem = [&](vertex v) { return inst_.unremovable.contains(v); };
  const vertex p = live_parent(x);
  auto mark = [&](step_outcome o) {
    marked_[x] = 1;
    done_[x] = 1;
    return o;
  };
  step_outcome out;
  if (unrem(x)) {
    if (deg_[x] < d + 1)
      out = mark(step_outcome::marked);
    else if (deg_[x] > d + 1 || p < 0 || unrem(p))
      return step_outcome::cancel;
    else {
      remove(p);
      out = mark(step_outcome::removed_parent);
    }
  } else if (p < 0 || !unrem(p)) {
    if (deg_[x] < d + 1) {
      out = mark(step_outcome::marked);
    } else if (deg_[x] > d + 1 || p < 0) {
      remove(x);
      out = step_outcome::removed_self;
    } else {
      remove(p);
      out = mark(step_outcome::removed_parent);
    }
  } else {
    if (deg_[x] >= d + 1) {
      remove(x);
      out = step_outcome::removed_self;
    } else if (deg_[p] < d + 1) {
      out = mark(step_outcome::marked);
    } else {
      vertex pp = live_parent(p);
      bool took_pp = false;
      if (pp >= 0 && !unrem(pp)) {
        remove(pp);
        took_pp = true;
      }
      if (deg_[p] >= d + 1) {
        remove(x);
        out = step_outcome::removed_self;
      } else {
        out = mark(took_pp ? step_outcome::removed_grandparent : step_outcome::marked);
      }
      if (took_pp && out == step_outcome::removed_self) out = step_outcome::removed_grandparent;
    }
  }
  if (alive_[x] && !(marked_[x] && deg_[x] <= d)) throw std::logic_error("decision step left x unresolved");
  return out;
}

std::optional<vertex_set> optimal_annotated_bdd_forest(const annotated_bdd_instance& inst, root_rule rule) {
  bdd_forest_state st(inst, rule);
  for (vertex x = st.next(); x >= 0; x = st.next())
    if (st.decision_step(x) == step_outcome::cancel) return std::nullopt;
  return st.removed_set();
}

solve_result solve_annotated_bdd_forest(const annotated_bdd_instance& inst, root_rule rule) {
  auto m = optimal_annotated_bdd_forest(inst, rule);
  if (!m || m->size() > inst.k) return solve_result::no();
  if (!is_annotated_bdd_solution(inst, *m)) throw std::logic_error("forest solution failed verification");
  return solve_result::found(*m);
}

namespace {

struct fes_branching {
  const annotated_bdd_instance& inst;
  const std::vector<edge>& fes;
  std::vector<char> removed, unrem;
  std::vector<edge> cut;
  int used = 0;
  std::uint64_t leaves = 0;
  std::optional<vertex_set> found;

  bool rec(std::size_t j) {
    if (used > inst.k) return false;
    if (j == fes.size()) return leaf();
    auto [x, y] = fes[j];
    if (removed[x] || removed[y]) return rec(j + 1);
    for (vertex v : {x, y}) {
      if (unrem[v]) continue;
      removed[v] = 1;
      ++used;
      bool ok = rec(j + 1);
      --used;
      removed[v] = 0;
      if (ok) return true;
    }
    char ux = unrem[x], uy = unrem[y];
    unrem[x] = unrem[y] = 1;
    cut.push_back({x, y});
    bool ok = rec(j + 1);
    cut.pop_back();
    unrem[x] = ux;
    unrem[y] = uy;
    return ok;
  }

  bool leaf() {
    ++leaves;
    const int n = inst.g.vertex_count();
    std::vector<edge> es;
    std::vector<edge> cuts = cut;
    std::sort(cuts.begin(), cuts.end());
    for (auto e : inst.g.edges())
      if (!std::binary_search(cuts.begin(), cuts.end(), e)) es.push_back(e);
    // one fresh unremovable leaf per cut endpoint stands in for the lost edge
    int extra = 0;
    std::vector<vertex> u;
    for (auto [a, b] : cut) {
      es.push_back({a, n + extra});
      u.push_back(n + extra++);
      es.push_back({b, n + extra});
      u.push_back(n + extra++);
    }
    for (vertex v = 0; v < n; ++v)
      if (unrem[v] || inst.unremovable.contains(v)) u.push_back(v);
    undirected_graph h(n + extra, es);
    std::vector<vertex> gone;
    for (vertex v = 0; v < n; ++v)
      if (removed[v]) gone.push_back(v);
    auto ind = delete_vertices(h, vertex_set(gone));
    std::vector<vertex> u2;
    for (vertex v : u)
      if (ind.old_to_new[v] >= 0) u2.push_back(ind.old_to_new[v]);
    annotated_bdd_instance sub{std::move(ind.graph), vertex_set(u2), inst.d, inst.k - used};
    auto m = optimal_annotated_bdd_forest(sub);
    if (!m || m->size() > sub.k) return false;
    std::vector<vertex> w = gone;
    for (vertex v : *m) w.push_back(ind.new_to_old[v]);
    vertex_set ws(w);
    if (!is_annotated_bdd_solution(inst, ws)) return false;
    found = ws;
    return true;
  }
};

}  // namespace

solve_result solve_annotated_bdd(const annotated_bdd_instance& inst, const feedback_edge_set& fes,
                                 bdd_search_stats* stats) {
  inst.validate();
  if (!verify_feedback_set(inst.g, fes)) throw usage_error("not a feedback edge set of the graph");
  int n = inst.g.vertex_count();
  std::vector<char> unrem(n, 0);
  for (vertex v : inst.unremovable) unrem[v] = 1;
  std::vector<edge> es;
  for (auto [u, v] : fes.edges) es.push_back({std::min(u, v), std::max(u, v)});
  fes_branching b{inst, es, std::vector<char>(n, 0), unrem, {}, 0, 0, std::nullopt};
  bool ok = b.rec(0);
  if (stats) stats->leaves = b.leaves;
  if (ok) return solve_result::found(*b.found, b.leaves);
  return solve_result::no(b.leaves);
}

solve_result solve_bdd(const bdd_instance& inst, const feedback_edge_set& fes, bdd_search_stats* stats) {
  inst.validate();
  return solve_annotated_bdd(annotated_bdd_instance{inst.g, {}, inst.d, inst.k}, fes, stats);
}

solve_result solve_bdd(const bdd_instance& inst, bdd_search_stats* stats) {
  return solve_bdd(inst, min_feedback_edge_set(inst.g), stats);
}

}  // namespace degdel
