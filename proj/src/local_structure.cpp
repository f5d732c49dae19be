#include "czoo/local_structure.hpp"

#include <cmath>

#include "czoo/geodesic.hpp"
#include "czoo/graph_measures.hpp"
#include "czoo/parallel.hpp"

namespace czoo {

namespace {

void require_undirected(const Graph& g, const char* measure) {
    if (g.directed())
        throw_requirement("requires-undirected",
                          std::string(measure) + " expects an undirected graph");
}

}  // namespace

ScoreVector localrank(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("localrank", n);
    std::vector<double> reach2(n, 0.0);
    parallel_for(n, [&](std::size_t k) {
        auto dist = hop_distances(g, static_cast<node_id>(k));
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k && dist[j] >= 1 && dist[j] <= 2) ++count;
        reach2[k] = static_cast<double>(count);
    });
    std::vector<double> q(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(j)))
            q[j] += reach2[static_cast<std::size_t>(nb.node)];
    for (std::size_t i = 0; i < n; ++i)
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sv.values[i] += q[static_cast<std::size_t>(nb.node)];
    return sv;
}

ScoreVector clusterrank(const Graph& g) {
    require_undirected(g, "clusterrank");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("clusterrank", n);
    auto clustering = clustering_coefficient(g);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sum += static_cast<double>(g.degree(nb.node)) + 1.0;
        sv.values[i] = std::pow(10.0, -clustering.values[i]) * sum;
    }
    return sv;
}

ScoreVector leverage(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("leverage", n);
    for (std::size_t i = 0; i < n; ++i) {
        double d_i = static_cast<double>(g.degree(static_cast<node_id>(i)));
        if (d_i == 0.0) {
            sv.mark(i, entry_state::undefined);
            continue;
        }
        double sum = 0.0;
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i))) {
            double d_j = static_cast<double>(g.degree(nb.node));
            sum += (d_i - d_j) / (d_i + d_j);
        }
        sv.values[i] = sum / d_i;
    }
    return sv;
}

ScoreVector neighborhood_connectivity(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("neighborhood-connectivity", n);
    for (std::size_t i = 0; i < n; ++i) {
        double d_i = static_cast<double>(g.degree(static_cast<node_id>(i)));
        if (d_i == 0.0) continue;  // defined to be zero for isolated nodes
        double sum = 0.0;
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
            sum += static_cast<double>(g.degree(nb.node));
        sv.values[i] = sum / d_i;
    }
    return sv;
}

ScoreVector burt_constraint(const Graph& g) {
    require_undirected(g, "burt constraint");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("burt-constraint", n);
    for (std::size_t i = 0; i < n; ++i) {
        auto u = static_cast<node_id>(i);
        auto nbrs = g.out_neighbors(u);
        if (nbrs.empty()) {
            sv.mark(i, entry_state::undefined);
            continue;
        }
        double p_direct = 1.0 / static_cast<double>(nbrs.size());
        double total = 0.0;
        for (const Neighbor& j : nbrs) {
            double indirect = 0.0;
            for (const Neighbor& k : nbrs) {
                if (k.node == j.node) continue;
                if (!g.has_edge(k.node, j.node)) continue;
                indirect += p_direct / static_cast<double>(g.degree(k.node));
            }
            double term = p_direct + indirect;
            total += term * term;
        }
        sv.values[i] = total;
    }
    return sv;
}

ScoreVector effective_size(const Graph& g) {
    require_undirected(g, "effective size");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("effective-size", n);
    for (std::size_t i = 0; i < n; ++i) {
        auto u = static_cast<node_id>(i);
        auto nbrs = g.out_neighbors(u);
        if (nbrs.empty()) continue;
        double p = 1.0 / static_cast<double>(nbrs.size());
        double total = 0.0;
        for (const Neighbor& j : nbrs) {
            // Marginal strength m_jk is a_jk normalized by j's strongest tie,
            // which is 1 here since j is adjacent to i.
            double redundancy_j = 0.0;
            for (const Neighbor& k : nbrs) {
                if (k.node == j.node) continue;
                if (g.has_edge(j.node, k.node)) redundancy_j += p;
            }
            total += 1.0 - redundancy_j;
        }
        sv.values[i] = total;
    }
    return sv;
}

ScoreVector redundancy(const Graph& g) {
    require_undirected(g, "redundancy");
    const std::size_t n = g.node_count();
    auto clustering = clustering_coefficient(g);
    auto sv = ScoreVector::zeros("redundancy", n);
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(g.degree(static_cast<node_id>(i)));
        sv.values[i] = d <= 1.0 ? 0.0 : clustering.values[i] * (d - 1.0);
    }
    return sv;
}

}  // namespace czoo
