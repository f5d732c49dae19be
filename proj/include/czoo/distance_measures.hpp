#pragma once

#include "czoo/geodesic.hpp"
#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Measures that aggregate per-node distance profiles. Per-source geodesic
// work runs in parallel; each function documents its disconnection contract.

// c(i) = (N-1) / sum_j d_ij. Connected graphs only.
ScoreVector closeness(const Graph& g);

// c(i) = sum_{j != i} 1/d_ij; unreachable pairs contribute 0.
ScoreVector harmonic(const Graph& g);

// c(i) = 1 / max_j d_ij. Connected graphs only.
ScoreVector eccentricity_centrality(const Graph& g);

// c(i) = |R_i|^2 / sum_{j in R_i} d_ij over the reachable set R_i (excluding
// i); isolated nodes score 1.
ScoreVector lin_index(const Graph& g);

// c(i) = sum_{j != i} delta^{d_ij}, 0 < delta < 1.
ScoreVector decay(const Graph& g, double delta);

// c(i) = sum_{j != i} (diam + 1 - d_ij) / (N-1). Connected graphs only.
// Serves both the radiality and (undirected) integration names.
ScoreVector radiality(const Graph& g);

// c(i) = sum_{j != i} d_ij^{-delta} / (N-1). For delta <= 0 the graph must be
// connected; for delta > 0 unreachable pairs contribute 0.
ScoreVector delta_closeness(const Graph& g, double delta);

// Inverted power mean of the distance profile; p = 0 is the geometric-mean
// branch. Connected graphs only.
ScoreVector p_means(const Graph& g, double p);

// c(i) = |N^(<=m)(i)| (hop-count balls).
ScoreVector m_reach(const Graph& g, int m);

// c(i) = (# nodes reachable from i) / (N-1), following outgoing edges.
ScoreVector local_reaching(const Graph& g);

// c(i) = sum over targets within hop distance k of the shortest-path counts
// sigma_ij. Unit-weight graphs only (hop semantics).
ScoreVector geodesic_kpath(const Graph& g, int k);

}  // namespace czoo
