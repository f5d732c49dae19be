#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Removal-impact measures.

// Relative drop in Laplacian energy E_L = sum_i strength_i^2 + 2 sum w^2
// when the node is deleted; computed in closed form, no eigensolve.
// Undirected with at least one edge.
ScoreVector laplacian_centrality(const Graph& g);

// Closed form d_i^2 + d_i + sum_{j in N(i)} d_j for the quasi-Laplacian
// energy drop. Undirected.
ScoreVector quasi_laplacian(const Graph& g);

// Wiener-index change W(G) - W(G_i) over ordered pairs; cut vertices get the
// negative-infinity sentinel. Connected graphs only.
ScoreVector closeness_vitality(const Graph& g);

// Relative drop in global efficiency E = (1/(N(N-1))) sum 1/d_jk; the
// remnant uses its own (N-1)(N-2) normalization.
ScoreVector efficiency_centrality(const Graph& g);

}  // namespace czoo
