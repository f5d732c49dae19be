#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Betweenness-family measures over the shortest-path DAG, all using one
// per-source backward dependency-accumulation engine and the ordered-pair
// convention (each unordered pair of an undirected graph contributes twice).
//
// `halve` divides by 2 for interoperability with unordered-pair libraries;
// `normalize` divides by (N-1)(N-2).
struct BetweennessOptions {
    bool normalize = false;
    bool halve = false;
};

// c(i) = sum_{j != k != i} sigma_jk(i) / sigma_jk.
ScoreVector betweenness(const Graph& g, const BetweennessOptions& opt = {});

// c(i) = sum_{j != k != i} sigma_jk(i).
ScoreVector stress(const Graph& g, const BetweennessOptions& opt = {});

// Betweenness restricted to pairs with d_jk <= k. Unit weights only.
ScoreVector k_betweenness(const Graph& g, int k, const BetweennessOptions& opt = {});

// c(i) = sum (1/d_jk) sigma_jk(i)/sigma_jk.
ScoreVector length_scaled_betweenness(const Graph& g, const BetweennessOptions& opt = {});

// Betweenness where a node also counts as source or target of each path.
ScoreVector endpoint_betweenness(const Graph& g, const BetweennessOptions& opt = {});

}  // namespace czoo
