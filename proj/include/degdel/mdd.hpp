// Minimum degree deletion: low-degree kernel, feedback-edge search and the
// feedback-vertex driver over annotated subproblems.
#pragma once

#include <optional>
#include <vector>

#include "degdel/feedback.hpp"
#include "degdel/problems.hpp"

namespace degdel {

// Solution within budget in which wc ends with degree 0 or 1, if one exists.
// Exact for that restricted question.
std::optional<vertex_set> check_low_degree_solution(const mdd_instance& inst);

enum class cascade_order { ascending, descending };

struct kernel_output {
  mdd_instance reduced;               // wc and k remapped to the reduced graph
  std::optional<bool> resolved;       // set when the rule decides the instance
  std::optional<vertex_set> witness;  // original ids, when resolved to yes
  std::vector<vertex> removed;        // deletion trace, original ids
  std::vector<vertex> new_to_old;     // reduced id -> original id
};

// Low-degree check, then repeatedly delete a vertex other than wc of degree
// at most two (smallest id first by default). Resolves to no when the budget
// goes negative or wc is left with degree below two.
kernel_output remove_low_degree(const mdd_instance& inst, cascade_order order = cascade_order::ascending);

// For an unresolved kernel: reduced vertex count <= 2 * feedback edge number.
bool kernel_size_bound_holds(const kernel_output& out);

struct mdd_search_stats {
  std::uint64_t branches = 0;  // (N', N'') pairs visited
  int kernel_n = 0;
  int kernel_m = 0;
  std::optional<bool> resolved_by_kernel;
};

// Exact. `fes` must be a feedback edge set of inst.g.
solve_result mdd_search(const mdd_instance& inst, const feedback_edge_set& fes, mdd_search_stats* stats = nullptr);
solve_result mdd_search(const mdd_instance& inst, mdd_search_stats* stats = nullptr);

enum class annotated_backend { dp, ilp, xp, oracle };

// Exact. `fvs` must be a feedback vertex set of inst.g not containing wc.
solve_result mdd_solv(const mdd_instance& inst, const feedback_vertex_set& fvs,
                      annotated_backend backend = annotated_backend::dp);

}  // namespace degdel
