// Seeded random instances. All draws come from std::mt19937_64 (a fully
// specified engine) through uniform_below(), so a seed gives the same graph on
// every platform.
#pragma once

#include <cstdint>
#include <random>

#include "degdel/graph.hpp"

namespace degdel {

using rng_engine = std::mt19937_64;

// Uniform integer in [0, bound) by rejection: draws below 2^64 mod bound are
// discarded, then the draw is reduced mod bound.
std::uint64_t uniform_below(rng_engine& rng, std::uint64_t bound);

// Uniform among simple graphs with exactly m edges.
undirected_graph gen_random_undirected(int n, int m, std::uint64_t seed);
directed_graph gen_random_directed(int n, int m, std::uint64_t seed);

// Each vertex after the first, in a random order, joins a uniformly chosen
// earlier vertex with probability 3/4 and starts a new tree otherwise.
undirected_graph gen_forest(int n, std::uint64_t seed);

// Random recursive spanning tree plus s_e distinct extra edges, so the graph
// is connected and its feedback edge number is exactly s_e.
undirected_graph gen_with_feedback_budget(int n, int s_e, std::uint64_t seed);

}  // namespace degdel
