#include "degdel/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace degdel {

std::uint64_t uniform_below(rng_engine& rng, std::uint64_t bound) {
  if (bound == 0) throw usage_error("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

namespace {

// m distinct indices from [0, total), in draw order.
std::vector<std::uint64_t> sample_distinct(rng_engine& rng, std::uint64_t total, std::uint64_t m) {
  if (m > total) throw usage_error("too many edges for a simple graph");
  std::vector<std::uint64_t> out;
  if (2 * m <= total) {
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < m) {
      std::uint64_t x = uniform_below(rng, total);
      if (seen.insert(x).second) out.push_back(x);
    }
  } else {
    std::vector<std::uint64_t> all(total);
    std::iota(all.begin(), all.end(), 0);
    for (std::uint64_t t = 0; t < m; ++t) std::swap(all[t], all[t + uniform_below(rng, total - t)]);
    out.assign(all.begin(), all.begin() + m);
  }
  return out;
}

edge unrank_pair(std::uint64_t x, int n) {
  // pairs (u, v), u < v, row by row
  int u = 0;
  std::uint64_t row = n - 1;
  while (x >= row) {
    x -= row;
    ++u;
    --row;
  }
  return {u, static_cast<vertex>(u + 1 + x)};
}

std::vector<vertex> random_order(rng_engine& rng, int n) {
  std::vector<vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int t = n - 1; t > 0; --t) std::swap(p[t], p[uniform_below(rng, t + 1)]);
  return p;
}

}  // namespace

undirected_graph gen_random_undirected(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw usage_error("negative size");
  rng_engine rng(seed);
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<edge> es;
  for (auto x : sample_distinct(rng, total, m)) es.push_back(unrank_pair(x, n));
  return undirected_graph(n, es);
}

directed_graph gen_random_directed(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw usage_error("negative size");
  rng_engine rng(seed);
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1);
  std::vector<edge> es;
  for (auto x : sample_distinct(rng, total, m)) {
    vertex u = static_cast<vertex>(x / (n - 1));
    vertex v = static_cast<vertex>(x % (n - 1));
    if (v >= u) ++v;
    es.push_back({u, v});
  }
  return directed_graph(n, es);
}

undirected_graph gen_forest(int n, std::uint64_t seed) {
  if (n < 0) throw usage_error("negative size");
  rng_engine rng(seed);
  auto p = random_order(rng, n);
  std::vector<edge> es;
  for (int t = 1; t < n; ++t)
    if (uniform_below(rng, 4) != 0) es.push_back({p[uniform_below(rng, t)], p[t]});
  return undirected_graph(n, es);
}

undirected_graph gen_with_feedback_budget(int n, int s_e, std::uint64_t seed) {
  if (n < 1 || s_e < 0) throw usage_error("need n >= 1 and s_e >= 0");
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (static_cast<std::uint64_t>(s_e) > total - (n - 1)) throw usage_error("s_e too large for n");
  rng_engine rng(seed);
  auto p = random_order(rng, n);
  std::vector<edge> es;
  std::unordered_set<std::uint64_t> used;
  auto key = [n](vertex a, vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
  };
  for (int t = 1; t < n; ++t) {
    vertex a = p[uniform_below(rng, t)], b = p[t];
    es.push_back({a, b});
    used.insert(key(a, b));
  }
  while (static_cast<int>(es.size()) < n - 1 + s_e) {
    edge e = unrank_pair(uniform_below(rng, total), n);
    if (used.insert(key(e.first, e.second)).second) es.push_back(e);
  }
  return undirected_graph(n, es);
}

}  // namespace degdel
