#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Walk-counting measures from the symmetric eigendecomposition of A. The
// spectrum is computed once per graph and shared by every measure below.
// Dense solve, guarded at 5000 nodes.

// Eigenvalues descending with matching orthonormal eigenvectors.
struct SpectrumCache {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k][i]
};

const SpectrumCache& adjacency_spectrum(const Graph& g);

// c(i) = sum_j v_j(i)^2 e^{lambda_j}.
ScoreVector subgraph_centrality(const Graph& g);

// Odd / even closed-walk counterparts (sinh / cosh weights).
ScoreVector odd_subgraph(const Graph& g);
ScoreVector even_subgraph(const Graph& g);

// Row sums of e^A.
ScoreVector total_communicability(const Graph& g);

// Diagonal of (I - sA)^(-1); s defaults to 1/(N-1) and must lie in
// (0, 1/lambda_max).
ScoreVector resolvent_centrality(const Graph& g, std::optional<double> s = std::nullopt);

// Global index in (1/2, 1] (1 iff bipartite) plus per-node contributions.
std::pair<double, ScoreVector> bipartivity(const Graph& g);

}  // namespace czoo
