#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Peeling-based indices. All undirected; peeling uses unweighted degrees.

// k-shell/onion peeling: rounds remove every node whose degree is at or
// below the current core threshold; the threshold then moves to the minimum
// remaining degree. Cores follow the k-core membership definition (isolated
// nodes get core 0), layers count the global removal rounds.
Decomposition kshell(const Graph& g);

// Per-node core index from kshell as a plain score.
ScoreVector kshell_scores(const Graph& g);

// Lazily computed, shared k-shell decomposition for measures that consume
// core indices (gravity family, ink, coreness sums).
const Decomposition& cached_kshell(const Graph& g);

// Mixed degree decomposition: peeling by d_r + lambda * d_e, recomputed after
// each removal round. lambda = 0 reduces to kshell cores, lambda = 1 ranks by
// degree.
Decomposition mixed_degree_decomposition(const Graph& g, double lambda);

// Max truss number over incident edges (a k-truss keeps every edge in at
// least k-2 triangles); nodes with no edges score 0, tree nodes score 2.
ScoreVector ktruss_index(const Graph& g);

// Largest k such that the node has at least k neighbors of degree >= k.
ScoreVector lobby(const Graph& g);

// c(i) = h(i) + sum_{j in N(i)} h(j) with h the lobby index.
ScoreVector local_h_index(const Graph& g);

// c(i) = sum_{j in N(i)} k_s(j)^alpha.
ScoreVector ink(const Graph& g, double alpha = 1.0);

// c(i) = sum_{j in N(i)} ink_1(j).
ScoreVector extended_coreness(const Graph& g);

}  // namespace czoo
