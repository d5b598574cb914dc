#include "degdel/annotated_mdd.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "degdel/live_graph.hpp"

namespace degdel {

void check_annotated_preconditions(const annotated_mdd_instance& inst) {
  inst.validate();
  auto rest = delete_vertices(inst.g, inst.vf);
  if (!is_acyclic(rest.graph)) throw usage_error("G - vf is not a forest");
  for (vertex v = 0; v < inst.g.vertex_count(); ++v)
    if (v != inst.wc && inst.g.degree(v) < inst.i + 1)
      throw usage_error("vertex " + std::to_string(v) + " has degree below i + 1");
}

namespace {

std::vector<vertex> deletable_neighbors(const annotated_mdd_instance& inst) {
  std::vector<vertex> out;
  for (vertex x : inst.g.neighbors(inst.wc))
    if (!inst.vf.contains(x)) out.push_back(x);
  return out;
}

int fixed_neighbors(const annotated_mdd_instance& inst) {
  int c = 0;
  for (vertex x : inst.g.neighbors(inst.wc)) c += inst.vf.contains(x);
  return c;
}

// Cascade (degree <= t) started by deleting `start`, never deleting wc or
// `keep` vertices. Returns false if a keep vertex or a vf vertex would drop to
// <= t, or the budget is exceeded.
bool forced_cascade(live_undirected& st, const annotated_mdd_instance& inst, const std::vector<vertex>& start, int t,
                    const std::vector<char>& keep, int budget) {
  int used = 0;
  std::vector<vertex> q;
  for (vertex x : start) {
    if (!st.alive[x]) continue;
    if (++used > budget) return false;
    st.remove(x);
    for (vertex u : inst.g.neighbors(x)) q.push_back(u);
  }
  for (vertex v = 0; v < inst.g.vertex_count(); ++v) q.push_back(v);
  while (!q.empty()) {
    vertex v = q.back();
    q.pop_back();
    if (v == inst.wc || !st.alive[v] || st.deg[v] > t) continue;
    if (keep[v] || inst.vf.contains(v)) return false;
    if (++used > budget) return false;
    st.remove(v);
    for (vertex u : inst.g.neighbors(v)) q.push_back(u);
  }
  return true;
}

// Solutions in which wc keeps exactly `kept` of its deletable neighbours,
// for kept in {0, 1}; the rest is forced.
std::optional<vertex_set> low_degree_direct(const annotated_mdd_instance& inst) {
  auto ns = deletable_neighbors(inst);
  int kept = inst.i - fixed_neighbors(inst);
  if (kept < 0 || kept > 1 || kept > static_cast<int>(ns.size())) return std::nullopt;
  std::vector<char> keep(inst.g.vertex_count(), 0);
  for (vertex v : inst.vf) keep[v] = 1;
  auto attempt = [&](int skip) -> std::optional<vertex_set> {
    live_undirected st(inst.g);
    std::vector<vertex> del;
    for (int t = 0; t < static_cast<int>(ns.size()); ++t)
      if (t != skip) del.push_back(ns[t]);
    if (skip >= 0) keep[ns[skip]] = 1;
    bool ok = forced_cascade(st, inst, del, inst.i, keep, inst.k);
    if (skip >= 0) keep[ns[skip]] = 0;
    if (!ok) return std::nullopt;
    vertex_set m = st.removed();
    if (!is_annotated_mdd_solution(inst, m)) return std::nullopt;
    return m;
  };
  if (kept == 0) return attempt(-1);
  for (int t = 0; t < static_cast<int>(ns.size()); ++t)
    if (auto m = attempt(t)) return m;
  return std::nullopt;
}

}  // namespace

affected_sets compute_affected(const annotated_mdd_instance& inst) {
  affected_sets a;
  a.neighbors = deletable_neighbors(inst);
  for (vertex x : a.neighbors) {
    live_undirected st(inst.g);
    st.remove(x);
    std::vector<vertex> members{x};
    bool vf_hit = false;
    std::vector<vertex> q(inst.g.neighbors(x).begin(), inst.g.neighbors(x).end());
    while (!q.empty()) {
      vertex v = q.back();
      q.pop_back();
      if (v == inst.wc || !st.alive[v] || st.deg[v] > inst.i) continue;
      if (inst.vf.contains(v)) {
        vf_hit = true;
        continue;
      }
      st.remove(v);
      members.push_back(v);
      for (vertex u : inst.g.neighbors(v)) q.push_back(u);
    }
    a.sets.emplace_back(members);
    if (vf_hit)
      a.cost.push_back(std::nullopt);
    else
      a.cost.push_back(static_cast<int>(members.size()));
  }
  return a;
}

to_remain_tuple initial_tuple(const annotated_mdd_instance& inst, const affected_sets& a) {
  std::vector<char> covered(inst.g.vertex_count(), 0);
  for (auto& s : a.sets)
    for (vertex v : s) covered[v] = 1;
  to_remain_tuple s0;
  for (vertex vj : inst.vf) {
    int outside = 0;
    for (vertex u : inst.g.neighbors(vj)) outside += !covered[u];
    s0.push_back(std::max(0, inst.i + 1 - outside));
  }
  return s0;
}

namespace {

int e_count(const annotated_mdd_instance& inst, vertex vj, const vertex_set& ax) {
  int c = 0;
  for (vertex u : inst.g.neighbors(vj)) c += ax.contains(u);
  return c;
}

}  // namespace

to_remain_tuple remain(const to_remain_tuple& s, const annotated_mdd_instance& inst, const affected_sets& a,
                       int x_index, remain_variant variant) {
  to_remain_tuple r(s.size());
  int j = 0;
  for (vertex vj : inst.vf) {
    int e = e_count(inst, vj, a.sets[x_index]);
    int v = variant == remain_variant::additive ? s[j] + e : s[j] - e;
    r[j] = std::min(std::max(0, v), inst.i + 1);
    ++j;
  }
  return r;
}

solve_result annotated_mdd_dp(const annotated_mdd_instance& inst, const dp_options& opt) {
  check_annotated_preconditions(inst);
  affected_sets a = compute_affected(inst);
  const int d = static_cast<int>(a.neighbors.size());
  const int f = inst.vf.size();
  const int z_target = d - (inst.i - fixed_neighbors(inst));
  if (z_target < 0 || z_target > d) return solve_result::no();
  const int base = inst.i + 2;
  std::uint64_t tuples = 1;
  for (int j = 0; j < f; ++j) {
    tuples *= base;
    if (tuples > opt.max_cells) throw solver_refusal("tuple space too large");
  }
  const std::uint64_t cells = tuples * (d + 1) * (d + 1);
  if (cells > opt.max_cells) throw solver_refusal("dp table too large");

  // contributions e(v_j, x) per neighbour
  std::vector<std::vector<int>> e(d, std::vector<int>(f));
  for (int x = 0; x < d; ++x) {
    int j = 0;
    for (vertex vj : inst.vf) e[x][j++] = e_count(inst, vj, a.sets[x]);
  }
  auto decode = [&](std::uint64_t code, std::vector<int>& t) {
    for (int j = 0; j < f; ++j) {
      t[j] = static_cast<int>(code % base);
      code /= base;
    }
  };
  auto encode = [&](const std::vector<int>& t) {
    std::uint64_t code = 0;
    for (int j = f - 1; j >= 0; --j) code = code * base + t[j];
    return code;
  };
  // Precompute the successor tuple of each code for each kept neighbour.
  std::vector<std::vector<std::uint32_t>> next(d, std::vector<std::uint32_t>(tuples));
  std::vector<int> t(f);
  for (int x = 0; x < d; ++x)
    for (std::uint64_t c = 0; c < tuples; ++c) {
      decode(c, t);
      for (int j = 0; j < f; ++j) {
        int v = opt.variant == remain_variant::additive ? t[j] + e[x][j] : t[j] - e[x][j];
        t[j] = std::min(std::max(0, v), inst.i + 1);
      }
      next[x][c] = static_cast<std::uint32_t>(encode(t));
    }

  constexpr int inf = std::numeric_limits<int>::max() / 4;
  auto at = [&](int x, int z, std::uint64_t c) { return (static_cast<std::uint64_t>(x) * (d + 1) + z) * tuples + c; };
  std::vector<int> table(cells, inf);
  to_remain_tuple s0 = initial_tuple(inst, a);
  for (std::uint64_t c = 0; c < tuples; ++c) {
    decode(c, t);
    bool dominates = true;
    for (int j = 0; j < f; ++j) dominates = dominates && t[j] >= s0[j];
    if (dominates) table[at(0, 0, c)] = 0;
  }
  for (int x = 1; x <= d; ++x) {
    const int cost = a.cost[x - 1] ? *a.cost[x - 1] : inf;
    for (int z = 0; z <= x; ++z)
      for (std::uint64_t c = 0; c < tuples; ++c) {
        int best = table[at(x - 1, z, next[x - 1][c])];
        if (z >= 1 && cost < inf) best = std::min(best, table[at(x - 1, z - 1, c)] + cost);
        table[at(x, z, c)] = std::min(best, inf);
      }
  }
  const int opt_cost = table[at(d, z_target, 0)];
  if (opt_cost > inst.k) return solve_result::no(cells);

  std::vector<vertex> m;
  std::uint64_t c = 0;
  int z = z_target;
  for (int x = d; x >= 1; --x) {
    const int cost = a.cost[x - 1] ? *a.cost[x - 1] : inf;
    int here = table[at(x, z, c)];
    if (z >= 1 && cost < inf && table[at(x - 1, z - 1, c)] + cost == here) {
      for (vertex v : a.sets[x - 1]) m.push_back(v);
      --z;
    } else {
      c = next[x - 1][c];
    }
  }
  vertex_set w(m);
  if (!is_annotated_mdd_solution(inst, w)) return solve_result::no(cells);
  return solve_result::found(w, cells);
}

solve_result annotated_mdd_xp(const annotated_mdd_instance& inst, std::uint64_t max_branches) {
  inst.validate();
  const auto nb = inst.g.neighbors(inst.wc);
  const int deg = static_cast<int>(nb.size());
  if (inst.i > deg) return solve_result::no();
  // C(deg, i) with saturation
  std::uint64_t count = 1;
  for (int t = 0; t < inst.i; ++t) {
    count = count * (deg - t) / (t + 1);
    if (count > max_branches) throw solver_refusal("xp branch count above cap");
  }
  std::vector<char> none(inst.g.vertex_count(), 0);
  std::vector<int> idx(inst.i);
  for (int t = 0; t < inst.i; ++t) idx[t] = t;
  std::uint64_t branches = 0;
  while (true) {
    ++branches;
    std::vector<char> kept(deg, 0);
    for (int t : idx) kept[t] = 1;
    std::vector<vertex> mstar;
    for (int t = 0; t < deg; ++t)
      if (!kept[t]) mstar.push_back(nb[t]);
    live_undirected st(inst.g);
    for (vertex x : mstar) st.remove(x);
    // cascade over all vertices other than wc, then reject if vf was touched
    std::vector<vertex> q;
    for (vertex v = 0; v < inst.g.vertex_count(); ++v) q.push_back(v);
    while (!q.empty()) {
      vertex v = q.back();
      q.pop_back();
      if (v == inst.wc || !st.alive[v] || st.deg[v] > inst.i) continue;
      st.remove(v);
      for (vertex u : inst.g.neighbors(v)) q.push_back(u);
    }
    vertex_set m = st.removed();
    bool clean = true;
    for (vertex v : inst.vf) clean = clean && st.alive[v];
    if (clean && m.size() <= inst.k && is_annotated_mdd_solution(inst, m)) return solve_result::found(m, branches);
    int j = inst.i - 1;
    while (j >= 0 && idx[j] == deg - inst.i + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < inst.i; ++t) idx[t] = idx[t - 1] + 1;
  }
  return solve_result::no(branches);
}

namespace {

ilp_model build_model(const annotated_mdd_instance& inst, bool second) {
  ilp_model model;
  auto ns = deletable_neighbors(inst);
  std::vector<char> in_ns(inst.g.vertex_count(), 0);
  for (vertex x : ns) in_ns[x] = 1;
  std::map<std::vector<vertex>, int> group_of;
  std::vector<std::vector<vertex>> keys;
  for (vertex x : ns) {
    std::vector<vertex> key;
    for (vertex u : inst.g.neighbors(x))
      if (inst.vf.contains(u)) key.push_back(u);
    if (!group_of.count(key)) {
      group_of[key] = 0;
      keys.push_back(key);
    }
  }
  std::sort(keys.begin(), keys.end());
  for (int j = 0; j < static_cast<int>(keys.size()); ++j) group_of[keys[j]] = j;
  model.groups.resize(keys.size());
  for (vertex x : ns) {
    std::vector<vertex> key;
    for (vertex u : inst.g.neighbors(x))
      if (inst.vf.contains(u)) key.push_back(u);
    model.groups[group_of[key]].push_back(x);
  }
  auto& p = model.program;
  for (auto& grp : model.groups) {
    int must = 0;
    if (!second)
      for (vertex x : grp) {
        bool pinned = false;
        for (vertex u : inst.g.neighbors(x))
          if (u != inst.wc && !inst.vf.contains(u) && inst.g.degree(u) == inst.i + 1) pinned = true;
        must += pinned;
      }
    p.lo.push_back(must);
    p.hi.push_back(static_cast<int>(grp.size()));
  }
  const int need = second ? inst.i : inst.i + 1;
  for (vertex vq : inst.vf) {
    ip_row row;
    int fixed = 0;
    for (vertex u : inst.g.neighbors(vq)) fixed += !in_ns[u];
    row.rhs = need - fixed;
    for (int j = 0; j < static_cast<int>(keys.size()); ++j)
      if (std::binary_search(keys[j].begin(), keys[j].end(), vq)) row.terms.push_back({j, 1});
    model.vf_rows.push_back(vq);
    p.rows.push_back(row);
  }
  model.target = (second ? inst.i - 1 : inst.i) - fixed_neighbors(inst);
  return model;
}

// Keep x_j members of group j, preferring pinned vertices, then pad up to the
// target count with the smallest remaining ids. Everything else is deleted.
std::optional<vertex_set> realise(const annotated_mdd_instance& inst, const ilp_model& model, const ip_solution& sol,
                                  bool second) {
  int total = 0;
  for (auto& g : model.groups) total += static_cast<int>(g.size());
  if (model.target < 0 || model.target > total) return std::nullopt;
  std::vector<char> keep(inst.g.vertex_count(), 0);
  int kept = 0;
  for (int j = 0; j < static_cast<int>(model.groups.size()); ++j) {
    std::vector<vertex> order;
    for (vertex x : model.groups[j]) {
      bool pinned = false;
      for (vertex u : inst.g.neighbors(x))
        if (u != inst.wc && !inst.vf.contains(u) && inst.g.degree(u) == inst.i + 1) pinned = true;
      if (pinned && !second) order.push_back(x);
    }
    for (vertex x : model.groups[j])
      if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
    for (int t = 0; t < sol.x[j]; ++t) {
      keep[order[t]] = 1;
      ++kept;
    }
  }
  std::vector<vertex> all;
  for (auto& g : model.groups) all.insert(all.end(), g.begin(), g.end());
  std::sort(all.begin(), all.end());
  for (vertex x : all)
    if (kept < model.target && !keep[x]) {
      keep[x] = 1;
      ++kept;
    }
  if (kept != model.target) return std::nullopt;
  std::vector<vertex> m;
  for (vertex x : all)
    if (!keep[x]) m.push_back(x);
  return vertex_set(m);
}

}  // namespace

ilp_model build_ilp1(const annotated_mdd_instance& inst) { return build_model(inst, false); }
ilp_model build_ilp2(const annotated_mdd_instance& inst) { return build_model(inst, true); }

ilp_outcome annotated_mdd_ilp(const annotated_mdd_instance& inst) {
  check_annotated_preconditions(inst);
  if (inst.i <= 1) {
    if (auto m = low_degree_direct(inst)) return {solve_result::found(*m), ilp_case::low_degree};
    return {solve_result::no(), ilp_case::none};
  }
  // every deletable neighbour goes
  {
    auto ns = deletable_neighbors(inst);
    std::vector<char> keep(inst.g.vertex_count(), 0);
    live_undirected st(inst.g);
    if (fixed_neighbors(inst) == inst.i && forced_cascade(st, inst, ns, inst.i, keep, inst.k)) {
      vertex_set m = st.removed();
      if (is_annotated_mdd_solution(inst, m)) return {solve_result::found(m), ilp_case::all_deleted};
    }
  }
  {
    ilp_model model = build_ilp1(inst);
    if (auto sol = solve_min_sum(model.program); sol && sol->objective <= model.target) {
      if (auto m = realise(inst, model, *sol, false); m && is_annotated_mdd_solution(inst, *m))
        return {solve_result::found(*m), ilp_case::exact};
    }
  }
  {
    ilp_model model = build_ilp2(inst);
    if (auto sol = solve_min_sum(model.program); sol && sol->objective <= model.target) {
      annotated_mdd_instance lower = inst;
      lower.i = inst.i - 1;
      if (auto m = realise(inst, model, *sol, true); m && is_annotated_mdd_solution(lower, *m))
        return {solve_result::found(*m), ilp_case::nearly};
    }
  }
  return {solve_result::no(), ilp_case::none};
}

}  // namespace degdel
