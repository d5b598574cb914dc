#include "degdel/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace degdel {

namespace {

// Consecutive id blocks handed out in construction order.
struct id_pool {
  vertex next = 0;
  std::vector<vertex> take(int count) {
    std::vector<vertex> out(count);
    std::iota(out.begin(), out.end(), next);
    next += count;
    return out;
  }
};

vertex_set as_set(const std::vector<vertex>& v) { return vertex_set(v); }

void add_clique(std::vector<edge>& es, const std::vector<vertex>& c) {
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) es.push_back({c[a], c[b]});
}

}  // namespace

reduction_output<mid_instance> reduce_ds_to_mid(const undirected_graph& gs, int k) {
  const int n = gs.vertex_count();
  if (k < 1 || k > n) throw usage_error("dominating set reduction needs 1 <= k <= n");
  id_pool ids;
  vertex wc = ids.take(1)[0];
  auto V = ids.take(n);
  auto D = ids.take(n);
  auto X = ids.take(k + 1);
  auto Y = ids.take(k + 1);
  auto Z = ids.take(k + 1);
  std::vector<std::vector<vertex>> S;
  for (int i = 0; i < n; ++i) S.push_back(ids.take(6 * n));

  std::vector<edge> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back({V[i], wc});
    for (int j = 0; j < n; ++j)
      if (i == j || gs.has_edge(i, j)) arcs.push_back({V[i], D[j]});
  }
  for (auto& [from, to] : {std::pair{&X, &Y}, std::pair{&Y, &Z}, std::pair{&Z, &X}})
    for (vertex a : *from)
      for (vertex b : *to) arcs.push_back({a, b});
  // k sources per D vertex and k + 1 per V vertex, round-robin over X, Y, Z
  std::vector<vertex> xyz;
  for (auto* grp : {&X, &Y, &Z}) xyz.insert(xyz.end(), grp->begin(), grp->end());
  std::size_t rr = 0;
  auto feed = [&](vertex target, int count) {
    for (int t = 0; t < count; ++t) arcs.push_back({xyz[rr++ % xyz.size()], target});
  };
  for (vertex d : D) feed(d, k);
  for (vertex v : V) feed(v, k + 1);
  for (int i = 0; i < n; ++i)
    for (vertex s : S[i]) arcs.push_back({D[i], s});
  // six column blocks of n: first k or last k members of X, Y, Z
  const std::vector<vertex>* groups[3] = {&X, &Y, &Z};
  for (int row = 0; row < 6; ++row) {
    const auto& grp = *groups[row / 2];
    int first = row % 2 == 0 ? 0 : 1;
    for (int t = first; t < first + k; ++t)
      for (int i = 0; i < n; ++i)
        for (int j = row * n; j < (row + 1) * n; ++j) arcs.push_back({grp[t], S[i][j]});
  }

  reduction_output<mid_instance> out;
  out.instance = mid_instance{directed_graph(ids.next, arcs), wc, n - k};
  out.legend = {{"w_c", as_set({wc})}, {"V", as_set(V)}, {"D", as_set(D)},
                {"X", as_set(X)},      {"Y", as_set(Y)},  {"Z", as_set(Z)}};
  for (int i = 0; i < n; ++i) out.legend.push_back({"S_" + std::to_string(i + 1), as_set(S[i])});
  out.parameter_note = "budget n-k=" + std::to_string(n - k) + "; fvs<=" + std::to_string(k + 1) +
                       "; fas<=" + std::to_string((k + 1) * (k + 1));
  return out;
}

undirected_graph make_edge_count_even(const undirected_graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() % 2 == 0) return g;
  auto es = g.edges();
  if (n % 2 == 1) {
    // one universal vertex adds n (odd) edges
    for (vertex v = 0; v < n; ++v) es.push_back({v, n});
    return undirected_graph(n + 1, es);
  }
  // a triangle joined to everything adds 3 + 3n (odd) edges
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) es.push_back({n + a, n + b});
    for (vertex v = 0; v < n; ++v) es.push_back({v, n + a});
  }
  return undirected_graph(n + 3, es);
}

reduction_output<mdd_instance> reduce_is_to_mdd(const undirected_graph& g0, int k) {
  if (k < 2 || k > g0.vertex_count()) throw usage_error("independent set reduction needs 2 <= k <= n");
  undirected_graph gs = make_edge_count_even(g0);
  const int n = gs.vertex_count();
  const auto E = gs.edges();
  const int m = static_cast<int>(E.size());
  id_pool ids;
  vertex wc = ids.take(1)[0];
  auto V = ids.take(n);
  auto Ev = ids.take(m);
  std::vector<std::vector<vertex>> cv, ci, ce;
  for (int i = 0; i < n; ++i) {
    cv.push_back(ids.take(n - k + 1));
    ci.push_back(ids.take(n - k + 1));
  }
  for (int j = 0; j < m; ++j) ce.push_back(ids.take(n - k));

  std::vector<edge> es;
  for (int j = 0; j < m; ++j) {
    es.push_back({V[E[j].first], Ev[j]});
    es.push_back({V[E[j].second], Ev[j]});
  }
  for (vertex v : V) es.push_back({wc, v});
  for (int i = 0; i < n; ++i) {
    add_clique(es, cv[i]);
    add_clique(es, ci[i]);
    for (int t = 0; t < n - k; ++t) es.push_back({cv[i][t], V[i]});
    for (int t = 0; t < n - k + 1; ++t) es.push_back({cv[i][t], ci[i][t]});
  }
  for (int j = 0; j < m; ++j) {
    add_clique(es, ce[j]);
    for (vertex c : ce[j]) es.push_back({c, Ev[j]});
  }
  for (int j = 0; j + 1 < m; j += 2)
    for (int t = 0; t < n - k; ++t) es.push_back({ce[j][t], ce[j + 1][t]});

  reduction_output<mdd_instance> out;
  out.instance = mdd_instance{undirected_graph(ids.next, es), wc, k};
  out.legend = {{"w_c", as_set({wc})}, {"V", as_set(V)}, {"E", as_set(Ev)}};
  for (int i = 0; i < n; ++i) out.legend.push_back({"C_v" + std::to_string(i + 1), as_set(cv[i])});
  for (int i = 0; i < n; ++i) out.legend.push_back({"C_" + std::to_string(i + 1), as_set(ci[i])});
  for (int j = 0; j < m; ++j) out.legend.push_back({"C_e" + std::to_string(j + 1), as_set(ce[j])});
  out.parameter_note = "budget k=" + std::to_string(k) + "; source n=" + std::to_string(n) + " m=" + std::to_string(m);
  return out;
}

reduction_output<mdd_instance> reduce_suhs_to_mdd(int d, const std::vector<std::vector<int>>& sets, int k) {
  if (d < 1 || k < 0 || k > d) throw usage_error("hitting set reduction needs 0 <= k <= d and d >= 1");
  for (auto& s : sets) {
    if (s.empty()) throw usage_error("hitting set family contains an empty set");
    for (int x : s)
      if (x < 0 || x >= d) throw usage_error("hitting set element out of range");
  }
  id_pool ids;
  vertex wc = ids.take(1)[0];
  auto U = ids.take(d);
  auto S = ids.take(static_cast<int>(sets.size()));
  auto C = ids.take(k + 1);
  auto L = ids.take(d);
  std::vector<edge> es;
  for (vertex u : U) es.push_back({wc, u});
  for (std::size_t j = 0; j < sets.size(); ++j) {
    std::vector<int> elems = sets[j];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int x : elems) es.push_back({U[x], S[j]});
  }
  add_clique(es, C);
  for (vertex l : L)
    for (vertex c : C) es.push_back({l, c});
  for (auto* grp : {&U, &S})
    for (vertex v : *grp)
      for (int t = 0; t < k; ++t) es.push_back({v, C[t]});

  reduction_output<mdd_instance> out;
  out.instance = mdd_instance{undirected_graph(ids.next, es), wc, d - k};
  out.legend = {{"w_c", as_set({wc})}, {"U", as_set(U)}, {"S", as_set(S)}, {"C", as_set(C)}, {"L", as_set(L)}};
  out.parameter_note = "vertex cover without w_c <= " + std::to_string(d + 1 + k) + "; budget d-k=" +
                       std::to_string(d - k);
  return out;
}

bool is_vertex_cover(const undirected_graph& g, const vertex_set& c) {
  for (auto [u, v] : g.edges())
    if (!c.contains(u) && !c.contains(v)) return false;
  return true;
}

}  // namespace degdel
