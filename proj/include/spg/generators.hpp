#pragma once

#include <cstdint>
#include <vector>

#include "spg/profile.hpp"

namespace spg {

// n random traversals of a connected graph: start anywhere, repeatedly
// append a uniformly random vertex adjacent to the prefix. The result is
// compatible with g by construction.
Profile traversal_profile(const Graph& g, int n, std::uint64_t seed);

// Uniform random labelled tree (Pruefer sequence).
Graph random_tree(int m, std::uint64_t seed);

// Set-cover reduction, edge-count objective. Candidates: set i -> i, the
// covering candidate z -> |sets|+1. One voter per element (its sets first,
// then z, then the rest), plus one voter per set pair putting that pair
// first and z last. Minimising edges on the result costs clique + cover.
Profile setcover_profile_edges(int universe_size, const std::vector<std::vector<int>>& sets);

// Set-cover reduction, max-degree objective. Adds candidates t_i -> |sets|+1+i,
// voters (z, t_i, other t's, sets) per i, and one voter
// (t_1, S_1..S_m, z, t_2..t_m). Minimising the maximum degree costs |sets| + cover.
Profile setcover_profile_degree(int universe_size, const std::vector<std::vector<int>>& sets);

}  // namespace spg
