// Tiny bounded integer programs: minimise the sum of the variables subject to
// lower and upper bounds and rows sum(coef * x) >= rhs.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace degdel {

struct ip_row {
  std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
  int rhs = 0;
};

struct bounded_int_program {
  std::vector<int> lo, hi;
  std::vector<ip_row> rows;
  int variable_count() const { return static_cast<int>(lo.size()); }
};

struct ip_solution {
  std::vector<int> x;
  long long objective = 0;
};

// Depth-first branch and bound, values tried in ascending order. Among
// optimal points the first one reached is returned.
std::optional<ip_solution> solve_min_sum(const bounded_int_program& p, std::uint64_t* nodes = nullptr);

bool is_feasible(const bounded_int_program& p, const std::vector<int>& x);

}  // namespace degdel
