// Problem instances, results and definitional solution checks.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "degdel/graph.hpp"

namespace degdel {

// Raised when an exponential routine would exceed its configured cap.
class solver_refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct solve_result {
  bool yes = false;
  std::optional<vertex_set> witness;  // present iff yes
  std::uint64_t explored = 0;         // solver-specific work counter

  static solve_result no(std::uint64_t explored = 0) { return {false, std::nullopt, explored}; }
  static solve_result found(vertex_set w, std::uint64_t explored = 0) { return {true, std::move(w), explored}; }
};

// Directed: after deleting at most k vertices other than wc, wc must be the
// unique vertex of minimum in-degree.
struct mid_instance {
  directed_graph g;
  vertex wc = 0;
  int k = 0;
  void validate() const;
};

// Undirected analogue of mid_instance.
struct mdd_instance {
  undirected_graph g;
  vertex wc = 0;
  int k = 0;
  void validate() const;
};

struct bdd_instance {
  undirected_graph g;
  int d = 0;
  int k = 0;
  void validate() const;
};

// Final degree of wc must be exactly i, vertices of vf may not be deleted and
// every other survivor keeps degree at least i + 1.
struct annotated_mdd_instance {
  undirected_graph g;
  vertex_set vf;
  vertex wc = 0;
  int k = 0;
  int i = 0;
  // Checks ids and wc outside vf. Solver-specific preconditions are checked by
  // the solvers themselves.
  void validate() const;
};

struct annotated_bdd_instance {
  undirected_graph g;
  vertex_set unremovable;
  int d = 0;
  int k = 0;
  void validate() const;
};

bool is_mid_solution(const mid_instance& inst, const vertex_set& m);
bool is_mdd_solution(const mdd_instance& inst, const vertex_set& m);
bool is_bdd_solution(const bdd_instance& inst, const vertex_set& m);
bool is_annotated_mdd_solution(const annotated_mdd_instance& inst, const vertex_set& m);
bool is_annotated_bdd_solution(const annotated_bdd_instance& inst, const vertex_set& m);

}  // namespace degdel
