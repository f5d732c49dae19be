#pragma once

#include <vector>

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Electrical and Markov-chain measures via Laplacian linear algebra. Edge
// weights are costs, so they enter the circuit as resistances (conductance
// 1/w); on unit-weight graphs this is the standard unit-resistor network.

// Effective resistance between every pair, from one grounded-Laplacian
// factorization. Connected undirected graphs only.
std::vector<std::vector<double>> effective_resistance_matrix(const Graph& g);

// c(i) = (N-1) / sum_j Omega_ij.
ScoreVector current_flow_closeness(const Graph& g);

// c(i) = sum over ordered (s,t) pairs of the throughflow of i, divided by
// N(N-1). Interior throughflow is half the summed absolute edge currents;
// sources and targets count 1.
ScoreVector current_flow_betweenness(const Graph& g);

// c(i) = |R| / sum_{j != i} m_ji with m the mean first passage time of the
// conductance-weighted random walk. Irreducible chains only.
ScoreVector markov_centrality(const Graph& g);

}  // namespace czoo
