#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Semi-local and ego-network measures over 1-2-hop neighborhoods.

// c(i) = sum_{j in N(i)} sum_{k in N(j)} n(k) with n(k) = |N^(<=2)(k)|.
ScoreVector localrank(const Graph& g);

// c(i) = 10^(-clustering_i) * sum_{j in N(i)} (d_j + 1). Undirected.
ScoreVector clusterrank(const Graph& g);

// c(i) = (1/d_i) sum_{j in N(i)} (d_i - d_j)/(d_i + d_j); isolated nodes are
// undefined.
ScoreVector leverage(const Graph& g);

// Average neighbor degree; isolated nodes score 0.
ScoreVector neighborhood_connectivity(const Graph& g);

// Unweighted network constraint with p_ij = 1/d_i and indirect terms over
// common neighbors; isolated nodes are undefined. Undirected.
ScoreVector burt_constraint(const Graph& g);

// Number of nonredundant contacts via the p/m marginal-strength form;
// isolated nodes score 0. Undirected.
ScoreVector effective_size(const Graph& g);

// c_r(i) = clustering_i * (d_i - 1); 0 when d_i <= 1. Undirected.
ScoreVector redundancy(const Graph& g);

}  // namespace czoo
