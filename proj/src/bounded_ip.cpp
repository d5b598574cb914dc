#include "degdel/bounded_ip.hpp"

#include <limits>

#include "degdel/graph.hpp"

namespace degdel {

namespace {

struct bnb {
  const bounded_int_program& p;
  std::vector<std::vector<std::pair<int, int>>> by_var;  // var -> (row, coef)
  std::vector<long long> slack_max;  // row value if every free variable took its best value
  std::vector<int> x;
  long long sum = 0, lo_rest = 0;
  std::optional<ip_solution> best;
  std::uint64_t nodes = 0;

  explicit bnb(const bounded_int_program& prog) : p(prog), by_var(prog.variable_count()) {
    int n = p.variable_count();
    for (int v = 0; v < n; ++v)
      if (p.lo[v] > p.hi[v]) return;
    slack_max.assign(p.rows.size(), 0);
    for (int r = 0; r < static_cast<int>(p.rows.size()); ++r)
      for (auto [v, c] : p.rows[r].terms) {
        if (v < 0 || v >= n) throw usage_error("program row names unknown variable");
        by_var[v].push_back({r, c});
        slack_max[r] += c > 0 ? static_cast<long long>(c) * p.hi[v] : static_cast<long long>(c) * p.lo[v];
      }
    for (int v = 0; v < n; ++v) lo_rest += p.lo[v];
    x.assign(n, 0);
  }

  bool rows_reachable() const {
    for (int r = 0; r < static_cast<int>(p.rows.size()); ++r)
      if (slack_max[r] < p.rows[r].rhs) return false;
    return true;
  }

  void rec(int v) {
    ++nodes;
    if (best && sum + lo_rest >= best->objective) return;
    if (!rows_reachable()) return;
    if (v == p.variable_count()) {
      best = ip_solution{x, sum};
      return;
    }
    lo_rest -= p.lo[v];
    for (int val = p.lo[v]; val <= p.hi[v]; ++val) {
      // replace the optimistic contribution of v with val
      for (auto [r, c] : by_var[v]) slack_max[r] += static_cast<long long>(c) * val - (c > 0 ? static_cast<long long>(c) * p.hi[v] : static_cast<long long>(c) * p.lo[v]);
      x[v] = val;
      sum += val;
      rec(v + 1);
      sum -= val;
      for (auto [r, c] : by_var[v]) slack_max[r] -= static_cast<long long>(c) * val - (c > 0 ? static_cast<long long>(c) * p.hi[v] : static_cast<long long>(c) * p.lo[v]);
    }
    x[v] = 0;
    lo_rest += p.lo[v];
  }
};

}  // namespace

std::optional<ip_solution> solve_min_sum(const bounded_int_program& p, std::uint64_t* nodes) {
  if (p.hi.size() != p.lo.size()) throw usage_error("bounds length mismatch");
  for (int v = 0; v < p.variable_count(); ++v)
    if (p.lo[v] > p.hi[v]) return std::nullopt;
  bnb s(p);
  s.rec(0);
  if (nodes) *nodes = s.nodes;
  return s.best;
}

bool is_feasible(const bounded_int_program& p, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != p.variable_count()) return false;
  for (int v = 0; v < p.variable_count(); ++v)
    if (x[v] < p.lo[v] || x[v] > p.hi[v]) return false;
  for (auto& row : p.rows) {
    long long s = 0;
    for (auto [v, c] : row.terms) s += static_cast<long long>(c) * x[v];
    if (s < row.rhs) return false;
  }
  return true;
}

}  // namespace degdel
