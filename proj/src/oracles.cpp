#include "degdel/oracles.hpp"

#include <cstdlib>
#include <string>

namespace degdel {

int oracle_options::default_max_n() {
  if (const char* s = std::getenv("FBSOLVE_MAX_ORACLE_N")) {
    try {
      int v = std::stoi(s);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 14;
}

namespace {

void check_cap(int n, const oracle_options& opt) {
  if (n > opt.max_n)
    throw solver_refusal("oracle refused: n=" + std::to_string(n) + " exceeds cap " + std::to_string(opt.max_n));
}

// Depth-first walk over size-s subsets of cand, s = 0..k. State provides
// remove/restore/ok and is updated incrementally along the walk.
template <class State>
struct subset_walk {
  subset_walk(const std::vector<vertex>& c, State& s) : cand(c), st(s) {}
  const std::vector<vertex>& cand;
  State& st;
  std::uint64_t explored = 0;
  std::vector<vertex> chosen;

  bool rec(std::size_t start, int left) {
    if (left == 0) {
      ++explored;
      return st.ok();
    }
    for (std::size_t idx = start; idx + left <= cand.size(); ++idx) {
      vertex v = cand[idx];
      st.remove(v);
      chosen.push_back(v);
      if (rec(idx + 1, left - 1)) return true;
      chosen.pop_back();
      st.restore(v);
    }
    return false;
  }

  solve_result run(int k) {
    int top = std::min<int>(k, static_cast<int>(cand.size()));
    for (int s = 0; s <= top; ++s)
      if (rec(0, s)) return solve_result::found(vertex_set(chosen), explored);
    return solve_result::no(explored);
  }
};

// Degree bookkeeping shared by the deletion problems. `degs` holds in-degree
// (directed) or degree (undirected) of alive vertices; hist counts alive
// vertices other than `skip` by degree.
struct degree_book {
  std::vector<char> alive;
  std::vector<int> deg;
  std::vector<int> hist;
  vertex skip;

  degree_book(std::vector<int> d, vertex skip_v) : deg(std::move(d)), skip(skip_v) {
    int n = static_cast<int>(deg.size());
    alive.assign(n, 1);
    hist.assign(n + 1, 0);
    for (vertex v = 0; v < n; ++v)
      if (v != skip) ++hist[deg[v]];
  }
  void dec(vertex u) {
    if (u != skip) --hist[deg[u]];
    --deg[u];
    if (u != skip) ++hist[deg[u]];
  }
  void inc(vertex u) {
    if (u != skip) --hist[deg[u]];
    ++deg[u];
    if (u != skip) ++hist[deg[u]];
  }
  int count_at_most(int t) const {
    int c = 0;
    for (int x = 0; x <= t && x < static_cast<int>(hist.size()); ++x) c += hist[x];
    return c;
  }
};

struct mid_state {
  const directed_graph& g;
  degree_book b;
  vertex wc;
  mid_state(const directed_graph& graph, vertex w) : g(graph), b(in_degrees(graph), w), wc(w) {}
  static std::vector<int> in_degrees(const directed_graph& g) {
    std::vector<int> d(g.vertex_count());
    for (vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.in_degree(v);
    return d;
  }
  void remove(vertex v) {
    b.alive[v] = 0;
    --b.hist[b.deg[v]];
    for (vertex u : g.out_neighbors(v))
      if (b.alive[u]) b.dec(u);
  }
  void restore(vertex v) {
    for (vertex u : g.out_neighbors(v))
      if (b.alive[u]) b.inc(u);
    b.alive[v] = 1;
    ++b.hist[b.deg[v]];
  }
  bool ok() const { return b.count_at_most(b.deg[wc]) == 0; }
};

std::vector<int> degrees(const undirected_graph& g) {
  std::vector<int> d(g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  return d;
}

struct undirected_state {
  const undirected_graph& g;
  degree_book b;
  undirected_state(const undirected_graph& graph, vertex skip) : g(graph), b(degrees(graph), skip) {}
  void remove(vertex v) {
    b.alive[v] = 0;
    if (v != b.skip) --b.hist[b.deg[v]];
    for (vertex u : g.neighbors(v))
      if (b.alive[u]) b.dec(u);
  }
  void restore(vertex v) {
    for (vertex u : g.neighbors(v))
      if (b.alive[u]) b.inc(u);
    b.alive[v] = 1;
    if (v != b.skip) ++b.hist[b.deg[v]];
  }
};

struct mdd_state : undirected_state {
  vertex wc;
  mdd_state(const undirected_graph& g, vertex w) : undirected_state(g, w), wc(w) {}
  bool ok() const { return b.count_at_most(b.deg[wc]) == 0; }
};

struct annotated_state : undirected_state {
  vertex wc;
  int i;
  annotated_state(const undirected_graph& g, vertex w, int target) : undirected_state(g, w), wc(w), i(target) {}
  bool ok() const { return b.deg[wc] == i && b.count_at_most(i) == 0; }
};

// histogram over every vertex; ok when nothing alive exceeds d
struct bdd_state : undirected_state {
  int d;
  bdd_state(const undirected_graph& g, int bound) : undirected_state(g, -1), d(bound) {}
  bool ok() const {
    int n = static_cast<int>(b.hist.size()) - 1;
    for (int x = d + 1; x <= n; ++x)
      if (b.hist[x]) return false;
    return true;
  }
};

std::vector<vertex> all_except(int n, const vertex_set& excl) {
  std::vector<vertex> out;
  for (vertex v = 0; v < n; ++v)
    if (!excl.contains(v)) out.push_back(v);
  return out;
}

}  // namespace

solve_result oracle_mid(const mid_instance& inst, const oracle_options& opt) {
  inst.validate();
  check_cap(inst.g.vertex_count(), opt);
  auto cand = all_except(inst.g.vertex_count(), {inst.wc});
  mid_state st(inst.g, inst.wc);
  return subset_walk<mid_state>{cand, st}.run(inst.k);
}

solve_result oracle_mdd(const mdd_instance& inst, const oracle_options& opt) {
  inst.validate();
  check_cap(inst.g.vertex_count(), opt);
  auto cand = all_except(inst.g.vertex_count(), {inst.wc});
  mdd_state st(inst.g, inst.wc);
  return subset_walk<mdd_state>{cand, st}.run(inst.k);
}

solve_result oracle_bdd(const bdd_instance& inst, const oracle_options& opt) {
  inst.validate();
  check_cap(inst.g.vertex_count(), opt);
  auto cand = all_except(inst.g.vertex_count(), {});
  bdd_state st(inst.g, inst.d);
  return subset_walk<bdd_state>{cand, st}.run(inst.k);
}

solve_result oracle_annotated_mdd(const annotated_mdd_instance& inst, const oracle_options& opt) {
  inst.validate();
  check_cap(inst.g.vertex_count(), opt);
  vertex_set excl = inst.vf;
  excl.insert(inst.wc);
  auto cand = all_except(inst.g.vertex_count(), excl);
  annotated_state st(inst.g, inst.wc, inst.i);
  return subset_walk<annotated_state>{cand, st}.run(inst.k);
}

solve_result oracle_annotated_bdd(const annotated_bdd_instance& inst, const oracle_options& opt) {
  inst.validate();
  check_cap(inst.g.vertex_count(), opt);
  auto cand = all_except(inst.g.vertex_count(), inst.unremovable);
  bdd_state st(inst.g, inst.d);
  return subset_walk<bdd_state>{cand, st}.run(inst.k);
}

namespace {

// Selection walk: choose exactly s items; ok is checked at the leaves.
struct dominating_state {
  const undirected_graph& g;
  std::vector<int> hits;
  int undominated;
  explicit dominating_state(const undirected_graph& graph)
      : g(graph), hits(graph.vertex_count(), 0), undominated(graph.vertex_count()) {}
  void bump(vertex u, int by) {
    if (hits[u] == 0) --undominated;
    hits[u] += by;
    if (hits[u] == 0) ++undominated;
  }
  void remove(vertex v) {  // "remove" = pick into the set
    bump(v, 1);
    for (vertex u : g.neighbors(v)) bump(u, 1);
  }
  void restore(vertex v) {
    bump(v, -1);
    for (vertex u : g.neighbors(v)) bump(u, -1);
  }
  bool ok() const { return undominated == 0; }
};

struct independent_state {
  const undirected_graph& g;
  std::vector<char> in;
  int conflicts = 0;
  explicit independent_state(const undirected_graph& graph) : g(graph), in(graph.vertex_count(), 0) {}
  void remove(vertex v) {
    for (vertex u : g.neighbors(v)) conflicts += in[u];
    in[v] = 1;
  }
  void restore(vertex v) {
    in[v] = 0;
    for (vertex u : g.neighbors(v)) conflicts -= in[u];
  }
  bool ok() const { return conflicts == 0; }
};

struct hitting_state {
  std::vector<std::vector<int>> member_of;  // element -> set ids
  std::vector<int> hits;
  int unhit;
  hitting_state(int d, const std::vector<std::vector<int>>& sets)
      : member_of(d), hits(sets.size(), 0), unhit(static_cast<int>(sets.size())) {
    for (int j = 0; j < static_cast<int>(sets.size()); ++j)
      for (int x : sets[j]) {
        if (x < 0 || x >= d) throw usage_error("hitting set element out of range");
        member_of[x].push_back(j);
      }
  }
  void remove(vertex x) {
    for (int j : member_of[x])
      if (hits[j]++ == 0) --unhit;
  }
  void restore(vertex x) {
    for (int j : member_of[x])
      if (--hits[j] == 0) ++unhit;
  }
  bool ok() const { return unhit == 0; }
};

}  // namespace

solve_result oracle_dominating_set(const undirected_graph& g, int k, const oracle_options& opt) {
  if (k < 0) throw usage_error("negative budget");
  check_cap(g.vertex_count(), opt);
  auto cand = all_except(g.vertex_count(), {});
  dominating_state st(g);
  return subset_walk<dominating_state>{cand, st}.run(k);
}

solve_result oracle_independent_set(const undirected_graph& g, int k, const oracle_options& opt) {
  if (k < 0) throw usage_error("negative size");
  check_cap(g.vertex_count(), opt);
  auto cand = all_except(g.vertex_count(), {});
  if (k > g.vertex_count()) return solve_result::no();
  independent_state st(g);
  subset_walk<independent_state> w{cand, st};
  // independence is closed under subsets, so only size k matters
  if (w.rec(0, k)) return solve_result::found(vertex_set(w.chosen), w.explored);
  return solve_result::no(w.explored);
}

solve_result oracle_hitting_set(int d, const std::vector<std::vector<int>>& sets, int k, const oracle_options& opt) {
  if (k < 0 || d < 0) throw usage_error("negative parameter");
  check_cap(d, opt);
  std::vector<vertex> cand(d);
  for (int x = 0; x < d; ++x) cand[x] = x;
  hitting_state st(d, sets);
  return subset_walk<hitting_state>{cand, st}.run(k);
}

}  // namespace degdel
