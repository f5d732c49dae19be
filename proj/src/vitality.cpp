#include "czoo/vitality.hpp"

#include <cmath>

#include "czoo/geodesic.hpp"
#include "czoo/parallel.hpp"

namespace czoo {

namespace {

// Copy of g with one node removed (dense reindexing: ids above `gone` shift
// down by one).
Graph remove_node(const Graph& g, node_id gone) {
    std::vector<Graph::Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        if (e.source == gone || e.target == gone) continue;
        auto shift = [gone](node_id v) { return v > gone ? v - 1 : v; };
        edges.push_back({shift(e.source), shift(e.target), e.weight});
    }
    return Graph(g.node_count() - 1, std::move(edges), g.directed());
}

}  // namespace

ScoreVector laplacian_centrality(const Graph& g) {
    if (g.directed())
        throw_requirement("requires-undirected", "laplacian centrality expects an undirected graph");
    const std::size_t n = g.node_count();
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = g.out_strength(static_cast<node_id>(i));
        energy += s * s;
    }
    for (const auto& e : g.edges()) energy += 2.0 * e.weight * e.weight;
    if (energy == 0.0)
        throw_requirement("measure-undefined",
                          "laplacian centrality needs at least one edge (zero energy)");
    auto sv = ScoreVector::zeros("laplacian-centrality", n);
    for (std::size_t i = 0; i < n; ++i) {
        // Removing i drops strength_i^2 and 2 sum_j w_ij^2, and each
        // neighbour loses w_ij from its strength.
        double s_i = g.out_strength(static_cast<node_id>(i));
        double drop = s_i * s_i;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i))) {
            double s_j = g.out_strength(nb.node);
            drop += s_j * s_j - (s_j - nb.weight) * (s_j - nb.weight);
            drop += 2.0 * nb.weight * nb.weight;
        }
        sv.values[i] = drop / energy;
    }
    return sv;
}

ScoreVector quasi_laplacian(const Graph& g) {
    if (g.directed())
        throw_requirement("requires-undirected",
                          "quasi-laplacian centrality expects an undirected graph");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("quasi-laplacian", n);
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(g.degree(static_cast<node_id>(i)));
        double neighbor_sum = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            neighbor_sum += static_cast<double>(g.degree(nb.node));
        sv.values[i] = d * d + d + neighbor_sum;
    }
    return sv;
}

namespace {

// Ordered-pair Wiener index; infinity when disconnected.
double wiener_ordered(const Graph& g) {
    double total = 0.0;
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i) {
        auto r = sssp(g, static_cast<node_id>(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (r.dist[j] == kInfDist) return kInfDist;
            total += r.dist[j];
        }
    }
    return total;
}

}  // namespace

ScoreVector closeness_vitality(const Graph& g) {
    if (!g.connected())
        throw_requirement("requires-connected", "closeness vitality expects a connected graph");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("closeness-vitality", n);
    double w_total = wiener_ordered(g);
    parallel_for(n, [&](std::size_t i) {
        Graph rest = remove_node(g, static_cast<node_id>(i));
        double w = wiener_ordered(rest);
        if (w == kInfDist) {
            sv.values[i] = kInfDist;  // marked below; parallel section writes values only
        } else {
            sv.values[i] = w_total - w;
        }
    });
    for (std::size_t i = 0; i < n; ++i)
        if (sv.values[i] == kInfDist) sv.mark(i, entry_state::neg_infinity);
    return sv;
}

ScoreVector efficiency_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    auto efficiency = [](const Graph& h) {
        const std::size_t m = h.node_count();
        if (m <= 1) return 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            auto r = sssp(h, static_cast<node_id>(i));
            for (std::size_t j = 0; j < m; ++j)
                if (j != i && r.dist[j] != kInfDist) sum += 1.0 / r.dist[j];
        }
        return sum / (static_cast<double>(m) * static_cast<double>(m - 1));
    };
    double base = efficiency(g);
    if (base == 0.0)
        throw_requirement("measure-undefined",
                          "efficiency centrality needs a graph with positive efficiency");
    auto sv = ScoreVector::zeros("efficiency-centrality", n);
    parallel_for(n, [&](std::size_t i) {
        Graph rest = remove_node(g, static_cast<node_id>(i));
        sv.values[i] = (base - efficiency(rest)) / base;
    });
    return sv;
}

}  // namespace czoo
