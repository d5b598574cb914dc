// Minimum indegree deletion.
#pragma once

#include <optional>

#include "degdel/problems.hpp"

namespace degdel {

struct mid_search_stats {
  int outer_iterations = 0;           // values of i whose subset loop ran
  std::uint64_t subsets_tried = 0;    // (i, U) pairs examined
  std::uint64_t vertices_removed = 0; // summed over all branches
  int cap = 0;                        // largest i considered
  std::uint64_t verify_rejections = 0; // within budget but wc not the unique minimum
};

// Acyclic inputs only (usage_error otherwise). Deletes in-degree-0 vertices
// other than wc until none remain; exact.
solve_result solve_mid_acyclic(const mid_instance& inst);

// Try final in-degree i = 0..cap for wc: keep an i-subset U of its
// in-neighbours, delete the rest and every vertex that drops to in-degree
// <= i. cap defaults to the size of a greedy directed FVS, which bounds the
// final in-degree of wc in any solution.
solve_result solve_mid(const mid_instance& inst, std::optional<int> cap = std::nullopt,
                       mid_search_stats* stats = nullptr);

// Checks that the minimum in-degree of g is at most its exact minimum FVS size.
bool min_indegree_fvs_bound_holds(const directed_graph& g);

}  // namespace degdel
