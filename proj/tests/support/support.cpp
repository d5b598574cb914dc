#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace degdel::test {

namespace {

using code = std::uint64_t;

// Upper-triangle bits of the adjacency under the relabeling pos -> vertex.
code encode(const std::vector<mask>& adj, const std::vector<int>& order) {
  code c = 0;
  int n = static_cast<int>(order.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) c = c << 1 | ((adj[order[a]] >> order[b]) & 1);
  return c;
}

// Minimum code over relabelings that list vertices by ascending degree.
code canonical(const std::vector<mask>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b] || (deg[a] == deg[b] && a < b); });
  // permute within runs of equal degree
  std::vector<std::pair<int, int>> runs;
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && deg[order[e]] == deg[order[s]]) ++e;
    runs.push_back({s, e});
    s = e;
  }
  code best = ~code(0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      best = std::min(best, encode(adj, order));
      return;
    }
    auto [s, e] = runs[r];
    std::sort(order.begin() + s, order.begin() + e);
    do rec(r + 1);
    while (std::next_permutation(order.begin() + s, order.begin() + e));
  };
  rec(0);
  return best;
}

undirected_graph build(int n, const std::vector<mask>& adj) {
  std::vector<edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a] >> b & 1) es.push_back({a, b});
  return undirected_graph(n, es);
}

template <class F>
bool subsets_upto(const std::vector<int>& cand, int k, F&& f) {
  // ascending size; f(mask) returns true to stop
  int c = static_cast<int>(cand.size());
  k = std::min(k, c);
  std::vector<int> idx;
  std::function<bool(int, int, mask)> rec = [&](int start, int left, mask m) -> bool {
    if (left == 0) return f(m);
    for (int j = start; j + left <= c; ++j)
      if (rec(j + 1, left - 1, m | mask(1) << cand[j])) return true;
    return false;
  };
  for (int s = 0; s <= k; ++s)
    if (rec(0, s, 0)) return true;
  return false;
}

int first_size(const std::vector<int>& cand, int k, const std::function<bool(mask)>& ok) {
  int found = -1;
  subsets_upto(cand, k, [&](mask m) {
    if (!ok(m)) return false;
    found = std::popcount(m);
    return true;
  });
  return found;
}

std::vector<int> all_but(int n, mask excluded) {
  std::vector<int> c;
  for (int v = 0; v < n; ++v)
    if (!(excluded >> v & 1)) c.push_back(v);
  return c;
}

mask full(int n) { return n >= 32 ? ~mask(0) : (mask(1) << n) - 1; }

bool forest_after(const std::vector<mask>& adj, mask alive) {
  // peel vertices of degree <= 1
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
      if ((alive >> v & 1) && std::popcount(adj[v] & alive) <= 1) {
        alive &= ~(mask(1) << v);
        changed = true;
      }
  }
  return alive == 0;
}

bool dag_after(const std::vector<mask>& in, mask alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
      if ((alive >> v & 1) && (in[v] & alive) == 0) {
        alive &= ~(mask(1) << v);
        changed = true;
      }
  }
  return alive == 0;
}

}  // namespace

const std::vector<undirected_graph>& iso_classes(int n) {
  static std::vector<std::vector<undirected_graph>> cache;
  if (n < 0 || n > 7) throw std::invalid_argument("iso_classes supports n <= 7");
  if (cache.empty()) cache.push_back({undirected_graph(0)});
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());  // building classes on m vertices
    std::set<code> seen;
    std::vector<undirected_graph> out;
    for (const auto& g : cache[m - 1]) {
      auto base = adjacency(g);
      for (mask nb = 0; nb < (mask(1) << (m - 1)); ++nb) {
        auto adj = base;
        adj.push_back(nb);
        for (int v = 0; v < m - 1; ++v)
          if (nb >> v & 1) adj[v] |= mask(1) << (m - 1);
        if (seen.insert(canonical(adj)).second) out.push_back(build(m, adj));
      }
    }
    cache.push_back(std::move(out));
  }
  return cache[n];
}

void for_each_labeled_digraph(int n, const std::function<void(const directed_graph&)>& f) {
  if (n > 5) throw std::invalid_argument("labeled digraphs supported for n <= 5");
  std::vector<edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.push_back({a, b});
  const std::uint64_t total = std::uint64_t(1) << pairs.size();
  std::vector<edge> arcs;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    arcs.clear();
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (bits >> j & 1) arcs.push_back(pairs[j]);
    f(directed_graph(n, arcs));
  }
}

namespace {
bool coin(rng_engine& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }
}  // namespace

undirected_graph sample_undirected(int n, double p, rng_engine& rng) {
  std::vector<edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng, p)) es.push_back({a, b});
  return undirected_graph(n, es);
}

directed_graph sample_directed(int n, double p, rng_engine& rng) {
  std::vector<edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && coin(rng, p)) es.push_back({a, b});
  return directed_graph(n, es);
}

undirected_graph sample_forest(int n, double keep, rng_engine& rng) {
  std::vector<edge> es;
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (coin(rng, keep)) es.push_back({parent, v});
  }
  return undirected_graph(n, es);
}

std::vector<mask> adjacency(const undirected_graph& g) {
  std::vector<mask> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= mask(1) << v;
    adj[v] |= mask(1) << u;
  }
  return adj;
}

std::vector<mask> in_adjacency(const directed_graph& g) {
  std::vector<mask> in(g.vertex_count(), 0);
  for (auto [u, v] : g.arcs()) in[v] |= mask(1) << u;
  return in;
}

namespace {

// wc strictly below every other survivor in `deg`
bool unique_min(const std::vector<mask>& rows, mask alive, vertex wc) {
  int dw = std::popcount(rows[wc] & alive);
  for (int v = 0; v < static_cast<int>(rows.size()); ++v)
    if (v != wc && (alive >> v & 1) && std::popcount(rows[v] & alive) <= dw) return false;
  return true;
}

}  // namespace

int ref_min_mid(const directed_graph& g, vertex wc, int k) {
  int n = g.vertex_count();
  auto in = in_adjacency(g);
  return first_size(all_but(n, mask(1) << wc), k, [&](mask del) { return unique_min(in, full(n) & ~del, wc); });
}

int ref_min_mdd(const undirected_graph& g, vertex wc, int k) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  return first_size(all_but(n, mask(1) << wc), k, [&](mask del) { return unique_min(adj, full(n) & ~del, wc); });
}

int ref_min_bdd(const undirected_graph& g, int d, mask unremovable, int k) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  return first_size(all_but(n, unremovable), k, [&](mask del) {
    mask alive = full(n) & ~del;
    for (int v = 0; v < n; ++v)
      if ((alive >> v & 1) && std::popcount(adj[v] & alive) > d) return false;
    return true;
  });
}

int ref_min_annotated_mdd(const undirected_graph& g, mask vf, vertex wc, int i, int k) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  return first_size(all_but(n, vf | mask(1) << wc), k, [&](mask del) {
    mask alive = full(n) & ~del;
    if (std::popcount(adj[wc] & alive) != i) return false;
    for (int v = 0; v < n; ++v)
      if (v != wc && (alive >> v & 1) && std::popcount(adj[v] & alive) < i + 1) return false;
    return true;
  });
}

bool ref_dominating(const undirected_graph& g, int k) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  return first_size(all_but(n, 0), k, [&](mask s) {
    mask covered = s;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) covered |= adj[v];
    return covered == full(n);
  }) >= 0;
}

bool ref_independent(const undirected_graph& g, int k) {
  int n = g.vertex_count();
  if (k > n) return false;
  auto adj = adjacency(g);
  // any independent set of size >= k contains one of size exactly k
  bool found = false;
  subsets_upto(all_but(n, 0), k, [&](mask s) {
    if (std::popcount(s) != k) return false;
    for (int v = 0; v < n; ++v)
      if ((s >> v & 1) && (adj[v] & s)) return false;
    found = true;
    return true;
  });
  return found;
}

bool ref_hitting(int d, const std::vector<std::vector<int>>& sets, int k) {
  return first_size(all_but(d, 0), k, [&](mask h) {
    for (const auto& s : sets) {
      bool hit = false;
      for (int e : s) hit = hit || (h >> e & 1);
      if (!hit) return false;
    }
    return true;
  }) >= 0;
}

int ref_fvs(const undirected_graph& g, mask forbidden) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  return first_size(all_but(n, forbidden), n, [&](mask del) { return forest_after(adj, full(n) & ~del); });
}

int ref_fvs(const directed_graph& g) {
  int n = g.vertex_count();
  auto in = in_adjacency(g);
  return first_size(all_but(n, 0), n, [&](mask del) { return dag_after(in, full(n) & ~del); });
}

int ref_fas(const directed_graph& g) {
  // min over vertex orders of the number of backward arcs
  int n = g.vertex_count();
  if (n > 9) throw std::invalid_argument("ref_fas supports n <= 9");
  std::vector<int> pos(n), order(n);
  std::iota(order.begin(), order.end(), 0);
  auto arcs = g.arcs();
  int best = static_cast<int>(arcs.size());
  do {
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    int back = 0;
    for (auto [u, v] : arcs) back += pos[u] > pos[v];
    best = std::min(best, back);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

mask to_mask(const vertex_set& s) {
  mask m = 0;
  for (vertex v : s) m |= mask(1) << v;
  return m;
}

vertex_set from_mask(mask m) {
  std::vector<vertex> v;
  for (int b = 0; b < 32; ++b)
    if (m >> b & 1) v.push_back(b);
  return vertex_set(v);
}

std::string testdata(const std::string& name) { return std::string(DEGDEL_TESTDATA) + "/" + name; }

}  // namespace degdel::test
