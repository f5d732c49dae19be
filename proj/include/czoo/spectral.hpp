#pragma once

#include <optional>
#include <utility>

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Shared knobs for the fixed-point / power-iteration solvers. Tolerance is
// the L1 change per sweep. All solvers have a fixed sweep order and are
// deterministic given this configuration.
struct IterationConfig {
    double tolerance = 1e-12;
    long max_iterations = 100000;
};

// Spectral-radius estimate of the adjacency matrix by power iteration on
// A + I/2 (the shift removes period-2 oscillation on bipartite graphs and
// leaves eigenvectors unchanged).
double spectral_radius_estimate(const Graph& g, const IterationConfig& cfg = {});

// Nonnegative unit-L2 principal eigenvector of A. Undirected connected
// graphs only; the accepted result satisfies ||Ax - lambda x|| <= 1e-10 lambda.
ScoreVector eigenvector_centrality(const Graph& g, const IterationConfig& cfg = {});

// c = (I - alpha A)^(-1) 1 - 1, i.e. the attenuated sum over all walk lengths
// k >= 1. Requires 0 < alpha < 1/lambda_max. A nonzero `exogenous` beta
// switches to the fixed point c = alpha A c + beta 1 instead.
ScoreVector katz(const Graph& g, double alpha, double exogenous = 0.0,
                 const IterationConfig& cfg = {});

// Stationary random-walk-with-restart vector, sum 1. Dangling nodes spread
// their mass uniformly.
ScoreVector pagerank(const Graph& g, double alpha = 0.85, const IterationConfig& cfg = {});

// Principal eigenvectors of A A^T (hub) and A^T A (authority), unit L2.
std::pair<ScoreVector, ScoreVector> hits(const Graph& g, const IterationConfig& cfg = {});

// Random walk on the graph augmented with a ground node linked both ways to
// every node; returns the steady state plus the ground node's share.
ScoreVector leaderrank(const Graph& g, const IterationConfig& cfg = {});

// Fixed point of c = E + W c. The default W is the adjacency matrix scaled
// by 1/(N-1) and the default E is all ones; `w_scale` overrides the scale
// and `exogenous` the uniform E entry. Divergence (spectral radius of W at
// or above 1) raises a convergence error.
ScoreVector hubbell(const Graph& g, std::optional<double> w_scale = std::nullopt,
                    double exogenous = 1.0, const IterationConfig& cfg = {});

// Test/extension entry point: explicit weight matrix (dense, row-major) and
// exogenous vector.
ScoreVector hubbell_general(const std::vector<double>& w_row_major, std::size_t n,
                            const std::vector<double>& exogenous,
                            const IterationConfig& cfg = {});

}  // namespace czoo
