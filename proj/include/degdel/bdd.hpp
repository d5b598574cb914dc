// Bounded degree deletion on forests and via feedback-edge branching.
#pragma once

#include <optional>
#include <vector>

#include "degdel/feedback.hpp"
#include "degdel/problems.hpp"

namespace degdel {

enum class root_rule { smallest_id, largest_id };

enum class step_outcome {
  marked,               // x stays, degree already fine
  removed_self,
  removed_parent,       // x is then marked
  removed_grandparent,  // p_p went; x marked or removed as needed
  cancel                // no solution exists
};

// Bottom-up greedy over a rooted forest. Vertices are processed by depth
// (deepest first), then by current degree (largest first), then id.
class bdd_forest_state {
 public:
  bdd_forest_state(const annotated_bdd_instance& inst, root_rule rule = root_rule::smallest_id);

  // Next unprocessed alive vertex, or -1 when done.
  vertex next() const;
  step_outcome decision_step(vertex x);

  bool removed(vertex v) const { return !alive_[v]; }
  bool marked(vertex v) const { return marked_[v]; }
  int degree(vertex v) const { return deg_[v]; }
  vertex parent(vertex v) const { return parent_[v]; }
  int depth(vertex v) const { return depth_[v]; }
  vertex_set removed_set() const;

 private:
  void remove(vertex v);
  vertex live_parent(vertex v) const;

  const annotated_bdd_instance& inst_;
  std::vector<vertex> parent_;
  std::vector<int> depth_, deg_;
  std::vector<char> alive_, marked_, done_;
};

// Minimum deletion set on a forest respecting inst.unremovable, ignoring the
// budget; nullopt when none exists. Throws usage_error on cyclic input.
std::optional<vertex_set> optimal_annotated_bdd_forest(const annotated_bdd_instance& inst,
                                                       root_rule rule = root_rule::smallest_id);
solve_result solve_annotated_bdd_forest(const annotated_bdd_instance& inst, root_rule rule = root_rule::smallest_id);

struct bdd_search_stats {
  std::uint64_t leaves = 0;
};

// Exact. For each feedback edge {x, y}: delete x, delete y, or keep both,
// cut the edge and hang a fresh unremovable leaf on each endpoint.
solve_result solve_bdd(const bdd_instance& inst, const feedback_edge_set& fes, bdd_search_stats* stats = nullptr);
solve_result solve_bdd(const bdd_instance& inst, bdd_search_stats* stats = nullptr);
solve_result solve_annotated_bdd(const annotated_bdd_instance& inst, const feedback_edge_set& fes,
                                 bdd_search_stats* stats = nullptr);

}  // namespace degdel
