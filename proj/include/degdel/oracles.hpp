// Brute-force reference solvers. Candidate deletion sets are visited by
// ascending size and lexicographically within a size, so the first witness is
// a minimum one and `explored` counts the sets checked.
#pragma once

#include <vector>

#include "degdel/problems.hpp"

namespace degdel {

struct oracle_options {
  // Refuse instances with more vertices than this. Defaults to
  // FBSOLVE_MAX_ORACLE_N from the environment, else 14.
  int max_n = default_max_n();
  static int default_max_n();
};

solve_result oracle_mid(const mid_instance& inst, const oracle_options& opt = {});
solve_result oracle_mdd(const mdd_instance& inst, const oracle_options& opt = {});
solve_result oracle_bdd(const bdd_instance& inst, const oracle_options& opt = {});
solve_result oracle_annotated_mdd(const annotated_mdd_instance& inst, const oracle_options& opt = {});
solve_result oracle_annotated_bdd(const annotated_bdd_instance& inst, const oracle_options& opt = {});

// Source problems of the reductions. Witnesses are vertex ids, or element ids
// 0..d-1 for hitting set.
solve_result oracle_dominating_set(const undirected_graph& g, int k, const oracle_options& opt = {});
solve_result oracle_independent_set(const undirected_graph& g, int k, const oracle_options& opt = {});
solve_result oracle_hitting_set(int d, const std::vector<std::vector<int>>& sets, int k,
                                const oracle_options& opt = {});

}  // namespace degdel
