#include "czoo/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace czoo {

namespace {

void require_undirected(const Graph& g, const char* measure) {
    if (g.directed())
        throw_requirement("requires-undirected",
                          std::string(measure) + " expects an undirected graph");
}

}  // namespace

Decomposition kshell(const Graph& g) {
    require_undirected(g, "k-shell");
    const std::size_t n = g.node_count();
    Decomposition d;
    d.measure = "k-shell";
    d.core.assign(n, 0.0);
    d.layer.assign(n, 0);
    d.round_in_core.assign(n, 0);
    if (n == 0) return d;

    std::vector<std::size_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = g.degree(static_cast<node_id>(i));
    std::vector<char> removed(n, 0);
    std::size_t remaining = n;
    std::size_t k = 0;
    int layer = 0;
    while (remaining > 0) {
        // Advance the threshold to the minimum remaining degree if nothing
        // peels at the current level.
        std::size_t min_deg = SIZE_MAX;
        for (std::size_t i = 0; i < n; ++i)
            if (!removed[i]) min_deg = std::min(min_deg, degree[i]);
        if (min_deg > k) k = min_deg;
        int round_in_core = 0;
        for (;;) {
            std::vector<std::size_t> batch;
            for (std::size_t i = 0; i < n; ++i)
                if (!removed[i] && degree[i] <= k) batch.push_back(i);
            if (batch.empty()) break;
            ++layer;
            ++round_in_core;
            for (std::size_t i : batch) {
                removed[i] = 1;
                d.core[i] = static_cast<double>(k);
                d.layer[i] = layer;
                d.round_in_core[i] = round_in_core;
                --remaining;
            }
            for (std::size_t i : batch)
                for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
                    if (!removed[static_cast<std::size_t>(nb.node)])
                        --degree[static_cast<std::size_t>(nb.node)];
        }
    }
    return d;
}

namespace {
struct KshellSlot {
    Decomposition value;
};
}  // namespace

const Decomposition& cached_kshell(const Graph& g) {
    return g.cached<KshellSlot>([&] { return KshellSlot{kshell(g)}; }).value;
}

ScoreVector kshell_scores(const Graph& g) {
    const auto& d = cached_kshell(g);
    ScoreVector sv;
    sv.measure = "k-shell";
    sv.values = d.core;
    return sv;
}

Decomposition mixed_degree_decomposition(const Graph& g, double lambda) {
    require_undirected(g, "mixed degree decomposition");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw_usage("bad-param", "mdd requires lambda in [0, 1]");
    const std::size_t n = g.node_count();
    Decomposition d;
    d.measure = "mdd";
    d.core.assign(n, 0.0);
    d.layer.assign(n, 0);
    d.round_in_core.assign(n, 0);
    if (n == 0) return d;

    std::vector<char> removed(n, 0);
    std::vector<double> mixed(n, 0.0);
    auto recompute = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (removed[i]) continue;
            double residual = 0.0, exhausted = 0.0;
            for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i))) {
                if (removed[static_cast<std::size_t>(nb.node)])
                    exhausted += 1.0;
                else
                    residual += 1.0;
            }
            mixed[i] = residual + lambda * exhausted;
        }
    };

    std::size_t remaining = n;
    double k = 0.0;
    int layer = 0;
    constexpr double kEps = 1e-9;
    recompute();
    while (remaining > 0) {
        double min_mixed = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            if (!removed[i]) min_mixed = std::min(min_mixed, mixed[i]);
        if (min_mixed > k + kEps) k = min_mixed;
        int round_in_core = 0;
        for (;;) {
            std::vector<std::size_t> batch;
            for (std::size_t i = 0; i < n; ++i)
                if (!removed[i] && mixed[i] <= k + kEps) batch.push_back(i);
            if (batch.empty()) break;
            ++layer;
            ++round_in_core;
            for (std::size_t i : batch) {
                removed[i] = 1;
                d.core[i] = k;
                d.layer[i] = layer;
                d.round_in_core[i] = round_in_core;
                --remaining;
            }
            recompute();
        }
    }
    return d;
}

namespace {

// Truss numbers per edge via iterative support peeling.
std::vector<int> edge_truss_numbers(const Graph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<int> support(m, 0);
    std::map<std::pair<node_id, node_id>, std::size_t> index;
    for (std::size_t e = 0; e < m; ++e)
        index[{std::min(edges[e].source, edges[e].target),
               std::max(edges[e].source, edges[e].target)}] = e;
    auto edge_at = [&](node_id u, node_id v) -> std::ptrdiff_t {
        auto it = index.find({std::min(u, v), std::max(u, v)});
        return it == index.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
    };
    for (std::size_t e = 0; e < m; ++e) {
        node_id u = edges[e].source, v = edges[e].target;
        for (const Neighbor& nb : g.neighbors(u))
            if (nb.node != v && g.has_edge(nb.node, v)) ++support[e];
    }
    std::vector<int> truss(m, 0);
    std::vector<char> removed(m, 0);
    std::size_t remaining = m;
    int k = 2;
    while (remaining > 0) {
        bool peeled = true;
        while (peeled) {
            peeled = false;
            for (std::size_t e = 0; e < m; ++e) {
                if (removed[e] || support[e] > k - 2) continue;
                removed[e] = 1;
                truss[e] = k;
                --remaining;
                peeled = true;
                node_id u = edges[e].source, v = edges[e].target;
                for (const Neighbor& nb : g.neighbors(u)) {
                    if (nb.node == v) continue;
                    auto eu = edge_at(u, nb.node);
                    auto ev = edge_at(v, nb.node);
                    if (eu >= 0 && ev >= 0 && !removed[eu] && !removed[ev]) {
                        --support[static_cast<std::size_t>(eu)];
                        --support[static_cast<std::size_t>(ev)];
                    }
                }
            }
        }
        ++k;
    }
    return truss;
}

}  // namespace

ScoreVector ktruss_index(const Graph& g) {
    require_undirected(g, "k-truss index");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("k-truss", n);
    auto truss = edge_truss_numbers(g);
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto u = static_cast<std::size_t>(edges[e].source);
        auto v = static_cast<std::size_t>(edges[e].target);
        sv.values[u] = std::max(sv.values[u], static_cast<double>(truss[e]));
        sv.values[v] = std::max(sv.values[v], static_cast<double>(truss[e]));
    }
    return sv;
}

ScoreVector lobby(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("lobby", n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> degs;
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
            degs.push_back(g.degree(nb.node));
        std::sort(degs.rbegin(), degs.rend());
        std::size_t h = 0;
        while (h < degs.size() && degs[h] >= h + 1) ++h;
        sv.values[i] = static_cast<double>(h);
    }
    return sv;
}

ScoreVector local_h_index(const Graph& g) {
    const std::size_t n = g.node_count();
    auto h = lobby(g);
    auto sv = ScoreVector::zeros("local-h-index", n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = h.values[i];
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(i)))
            sum += h.values[static_cast<std::size_t>(nb.node)];
        sv.values[i] = sum;
    }
    return sv;
}

ScoreVector ink(const Graph& g, double alpha) {
    require_undirected(g, "ink");
    const std::size_t n = g.node_count();
    const auto& d = cached_kshell(g);
    auto sv = ScoreVector::zeros("ink", n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sum += std::pow(d.core[static_cast<std::size_t>(nb.node)], alpha);
        sv.values[i] = sum;
    }
    return sv;
}

ScoreVector extended_coreness(const Graph& g) {
    require_undirected(g, "extended coreness");
    const std::size_t n = g.node_count();
    auto base = ink(g, 1.0);
    auto sv = ScoreVector::zeros("extended-coreness", n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (const Neighbor& nb : g.out_neighbors(static_cast<node_id>(i)))
            sum += base.values[static_cast<std::size_t>(nb.node)];
        sv.values[i] = sum;
    }
    return sv;
}

}  // namespace czoo
