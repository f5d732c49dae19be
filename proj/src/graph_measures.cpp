#include "czoo/graph_measures.hpp"

namespace czoo {

ScoreVector degree_centrality(const Graph& g, degree_mode mode, bool weighted) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("degree", n);
    if (!g.directed() && mode != degree_mode::total) {
        sv.warn("in/out mode has no effect on an undirected graph; returning total degree");
        mode = degree_mode::total;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto u = static_cast<node_id>(i);
        switch (mode) {
            case degree_mode::in:
                sv.values[i] = weighted ? g.in_strength(u) : static_cast<double>(g.in_degree(u));
                break;
            case degree_mode::out:
                sv.values[i] = weighted ? g.out_strength(u) : static_cast<double>(g.out_degree(u));
                break;
            case degree_mode::total:
                if (g.directed()) {
                    sv.values[i] = weighted
                                       ? g.in_strength(u) + g.out_strength(u)
                                       : static_cast<double>(g.in_degree(u) + g.out_degree(u));
                } else {
                    sv.values[i] = weighted ? g.out_strength(u) : static_cast<double>(g.out_degree(u));
                }
                break;
        }
    }
    return sv;
}

ScoreVector degree_mass(const Graph& g, int m) {
    if (m < 0) throw_usage("bad-param", "degree-mass requires m >= 0");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("degree-mass", n);
    std::vector<double> power(n, 1.0);  // A^0 1
    std::vector<double> next(n, 0.0);
    for (int k = 1; k <= m + 1; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
                sum += power[static_cast<std::size_t>(nb.node)];
            next[i] = sum;
        }
        std::swap(power, next);
        for (std::size_t i = 0; i < n; ++i) sv.values[i] += power[i];
    }
    return sv;
}

ScoreVector clustering_coefficient(const Graph& g) {
    if (g.directed())
        throw_requirement("requires-undirected", "clustering coefficient expects an undirected graph");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("clustering-coefficient", n);
    for (std::size_t i = 0; i < n; ++i) {
        auto u = static_cast<node_id>(i);
        auto nbrs = g.out_neighbors(u);
        std::size_t d = nbrs.size();
        if (d <= 1) continue;
        std::size_t links = 0;  // ordered pairs, so each neighbor edge counts twice
        for (const Neighbor& a : nbrs)
            for (const Neighbor& b : nbrs)
                if (a.node != b.node && g.has_edge(a.node, b.node)) ++links;
        sv.values[i] = static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return sv;
}

}  // namespace czoo
