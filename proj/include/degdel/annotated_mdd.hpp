// Annotated minimum degree deletion: wc must end with degree exactly i, vf is
// undeletable and G - vf is a forest.
#pragma once

#include <optional>
#include <vector>

#include "degdel/bounded_ip.hpp"
#include "degdel/problems.hpp"

namespace degdel {

// Throws usage_error unless G - vf is a forest and every vertex other than wc
// has degree at least i + 1.
void check_annotated_preconditions(const annotated_mdd_instance& inst);

struct affected_sets {
  std::vector<vertex> neighbors;          // N(wc) \ vf, ascending
  std::vector<vertex_set> sets;           // A[x]: x plus the cascade it forces in G - vf
  std::vector<std::optional<int>> cost;   // |A[x]|; nullopt if deleting x drops a vf vertex to <= i
};

affected_sets compute_affected(const annotated_mdd_instance& inst);

// Entry j: how many more neighbours of the j-th vf vertex must survive.
using to_remain_tuple = std::vector<int>;

to_remain_tuple initial_tuple(const annotated_mdd_instance& inst, const affected_sets& a);

// How a kept neighbour x changes a tuple during the table fill.
enum class remain_variant { additive, subtractive };
to_remain_tuple remain(const to_remain_tuple& s, const annotated_mdd_instance& inst, const affected_sets& a,
                       int x_index, remain_variant variant);

struct dp_options {
  remain_variant variant = remain_variant::additive;
  std::uint64_t max_cells = 50'000'000;
};

solve_result annotated_mdd_dp(const annotated_mdd_instance& inst, const dp_options& opt = {});

// Brute force over kept neighbour sets of size i; refuses beyond max_branches.
solve_result annotated_mdd_xp(const annotated_mdd_instance& inst, std::uint64_t max_branches = 1'000'000);

struct ilp_model {
  bounded_int_program program;
  std::vector<std::vector<vertex>> groups;  // deletable neighbours by vf-neighbourhood
  std::vector<vertex> vf_rows;              // vf vertex behind each constraint row
  int target = 0;                           // kept deletable neighbours wanted
};

// Exact degree i for wc, survivors at least i + 1.
ilp_model build_ilp1(const annotated_mdd_instance& inst);
// Degree i - 1 for wc, survivors at least i.
ilp_model build_ilp2(const annotated_mdd_instance& inst);

enum class ilp_case { none, low_degree, all_deleted, exact, nearly };

struct ilp_outcome {
  solve_result result;
  ilp_case accepted = ilp_case::none;
};

// Case analysis with the two programs. A `nearly` witness leaves wc at degree
// i - 1 with every other survivor at least i, so it answers the unannotated
// question but not the annotated one at i.
ilp_outcome annotated_mdd_ilp(const annotated_mdd_instance& inst);

}  // namespace degdel
