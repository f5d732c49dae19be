#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Iterative spreader-selection heuristics. All rounds break score ties by
// lowest node id, so results are fully deterministic. k larger than N is
// truncated with a warning; k = 0 selects every node.

// Vote/select/update loop; each election zeroes the winner's voting ability
// and weakens its neighbours' by f = 1/<k> (average degree).
SeedSet voterank(const Graph& g, int k);

// Weighted voting variant: score sqrt(d_i * sum_j w_ji v_j).
SeedSet wvoterank(const Graph& g, int k);

// Discounted-degree heuristic dd_j = d_j - 2 t_j - (d_j - t_j) t_j p.
SeedSet degree_discount(const Graph& g, int k, double p = 0.01);

// Repeatedly pick the highest-degree node and remove it.
SeedSet single_discount(const Graph& g, int k);

}  // namespace czoo
