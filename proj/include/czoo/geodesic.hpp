#pragma once

#include <limits>
#include <vector>

#include "czoo/graph.hpp"

namespace czoo {

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

// Single-source shortest-path tree with path counts and the predecessor DAG.
// BFS for unit weights, Dijkstra otherwise; weights are costs.
struct GeodesicResult {
    node_id source = 0;
    std::vector<double> dist;               // kInfDist for unreachable
    std::vector<double> sigma;              // shortest-path counts (0 when unreachable)
    std::vector<node_id> order;             // reachable nodes in nondecreasing distance
    std::vector<std::vector<node_id>> preds;  // shortest-path DAG predecessors
    // Set when a path count exceeded 2^53 and lost integer precision.
    bool sigma_overflow = false;

    bool reachable(node_id v) const { return dist[static_cast<std::size_t>(v)] != kInfDist; }
};

GeodesicResult sssp(const Graph& g, node_id source);

// Hop-count BFS ignoring weights; used by neighborhood-ball semantics.
std::vector<int> hop_distances(const Graph& g, node_id source);

enum class khop_mode { exact, within };

// Nodes at hop distance exactly k / within 1..k of i (excluding i).
std::vector<node_id> khop_set(const Graph& g, node_id i, int k, khop_mode mode);

// Aggregated all-pairs information.
struct DistanceSummary {
    std::vector<double> eccentricity;      // max finite distance per node
    std::vector<std::size_t> reach_count;  // nodes reachable from i, excluding i
    double diameter = 0.0;                 // max eccentricity (finite part)
    bool connected = true;                 // strong connectivity when directed
};

DistanceSummary apsp_summary(const Graph& g);

// Dense distance matrix row set (one sssp per source, run in parallel).
// Convenience for measures that need random access to d_ij.
std::vector<std::vector<double>> all_pairs_distances(const Graph& g);

}  // namespace czoo
