// Parameterized reductions into the deletion problems, with role legends so
// outputs can be audited.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degdel/problems.hpp"

namespace degdel {

template <class Instance>
struct reduction_output {
  Instance instance;
  std::vector<std::pair<std::string, vertex_set>> legend;  // role -> vertices, construction order
  std::string parameter_note;

  const vertex_set& role(const std::string& name) const {
    for (auto& [r, s] : legend)
      if (r == name) return s;
    throw usage_error("no such role: " + name);
  }
};

// Dominating set of size <= k in g  <=>  MID instance with budget n - k.
// Vertex 0 is wc, then V, D, X, Y, Z and the padding groups S_1..S_n.
reduction_output<mid_instance> reduce_ds_to_mid(const undirected_graph& g, int k);

// Same independent-set answer for any k >= 2, with an even number of edges.
undirected_graph make_edge_count_even(const undirected_graph& g);

// Independent set of size >= k in g (2 <= k <= n)  <=>  MDD instance with
// budget k. The edge count is made even first.
reduction_output<mdd_instance> reduce_is_to_mdd(const undirected_graph& g, int k);

// Hitting set over elements 0..d-1 (non-empty sets, 0 <= k <= d) of size <= k
// <=>  MDD instance with budget d - k.
reduction_output<mdd_instance> reduce_suhs_to_mdd(int d, const std::vector<std::vector<int>>& sets, int k);

bool is_vertex_cover(const undirected_graph& g, const vertex_set& c);

}  // namespace degdel
