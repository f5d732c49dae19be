#include "czoo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

#include "czoo/parallel.hpp"

namespace czoo {

namespace {

constexpr double kSigmaPrecisionLimit = 9007199254740992.0;  // 2^53

// Relative tolerance for recognizing equal-length paths under floating
// weights, so the predecessor DAG is deterministic.
constexpr double kTieTol = 1e-12;

bool close_enough(double a, double b) {
    return std::abs(a - b) <= kTieTol * std::max({1.0, std::abs(a), std::abs(b)});
}

GeodesicResult bfs_sssp(const Graph& g, node_id source) {
    const std::size_t n = g.node_count();
    GeodesicResult r;
    r.source = source;
    r.dist.assign(n, kInfDist);
    r.sigma.assign(n, 0.0);
    r.preds.assign(n, {});
    r.order.reserve(n);

    r.dist[static_cast<std::size_t>(source)] = 0.0;
    r.sigma[static_cast<std::size_t>(source)] = 1.0;
    std::deque<node_id> queue{source};
    while (!queue.empty()) {
        node_id u = queue.front();
        queue.pop_front();
        r.order.push_back(u);
        double du = r.dist[static_cast<std::size_t>(u)];
        for (const Neighbor& nb : g.out_neighbors(u)) {
            auto v = static_cast<std::size_t>(nb.node);
            if (r.dist[v] == kInfDist) {
                r.dist[v] = du + 1.0;
                queue.push_back(nb.node);
            }
            if (r.dist[v] == du + 1.0) {
                r.sigma[v] += r.sigma[static_cast<std::size_t>(u)];
                if (r.sigma[v] > kSigmaPrecisionLimit) r.sigma_overflow = true;
                r.preds[v].push_back(u);
            }
        }
    }
    return r;
}

GeodesicResult dijkstra_sssp(const Graph& g, node_id source) {
    const std::size_t n = g.node_count();
    GeodesicResult r;
    r.source = source;
    r.dist.assign(n, kInfDist);
    r.sigma.assign(n, 0.0);
    r.preds.assign(n, {});
    r.order.reserve(n);

    using Entry = std::pair<double, node_id>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<char> settled(n, 0);
    r.dist[static_cast<std::size_t>(source)] = 0.0;
    r.sigma[static_cast<std::size_t>(source)] = 1.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        auto ui = static_cast<std::size_t>(u);
        if (settled[ui]) continue;
        settled[ui] = 1;
        r.order.push_back(u);
        for (const Neighbor& nb : g.out_neighbors(u)) {
            auto vi = static_cast<std::size_t>(nb.node);
            if (settled[vi]) continue;
            double cand = r.dist[ui] + nb.weight;
            if (close_enough(cand, r.dist[vi])) {
                r.sigma[vi] += r.sigma[ui];
                if (r.sigma[vi] > kSigmaPrecisionLimit) r.sigma_overflow = true;
                r.preds[vi].push_back(u);
            } else if (cand < r.dist[vi]) {
                r.dist[vi] = cand;
                r.sigma[vi] = r.sigma[ui];
                r.preds[vi].assign(1, u);
                heap.emplace(cand, nb.node);
            }
        }
    }
    return r;
}

}  // namespace

GeodesicResult sssp(const Graph& g, node_id source) {
    g.require_node(source);
    return g.unit_weights() ? bfs_sssp(g, source) : dijkstra_sssp(g, source);
}

std::vector<int> hop_distances(const Graph& g, node_id source) {
    std::vector<int> dist(g.node_count(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<node_id> queue{source};
    while (!queue.empty()) {
        node_id u = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.out_neighbors(u)) {
            if (dist[static_cast<std::size_t>(nb.node)] < 0) {
                dist[static_cast<std::size_t>(nb.node)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

std::vector<node_id> khop_set(const Graph& g, node_id i, int k, khop_mode mode) {
    g.require_node(i);
    if (k < 1) throw_usage("bad-param", "khop_set requires k >= 1");
    auto dist = hop_distances(g, i);
    std::vector<node_id> result;
    for (std::size_t v = 0; v < dist.size(); ++v) {
        if (static_cast<node_id>(v) == i || dist[v] < 0) continue;
        bool take = (mode == khop_mode::exact) ? (dist[v] == k) : (dist[v] >= 1 && dist[v] <= k);
        if (take) result.push_back(static_cast<node_id>(v));
    }
    return result;
}

DistanceSummary apsp_summary(const Graph& g) {
    const std::size_t n = g.node_count();
    DistanceSummary s;
    s.eccentricity.assign(n, 0.0);
    s.reach_count.assign(n, 0);
    parallel_for(n, [&](std::size_t i) {
        auto r = sssp(g, static_cast<node_id>(i));
        double ecc = 0.0;
        std::size_t reach = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (v == i || r.dist[v] == kInfDist) continue;
            ++reach;
            ecc = std::max(ecc, r.dist[v]);
        }
        s.eccentricity[i] = ecc;
        s.reach_count[i] = reach;
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (n > 1 && s.reach_count[i] != n - 1) s.connected = false;
        s.diameter = std::max(s.diameter, s.eccentricity[i]);
    }
    return s;
}

std::vector<std::vector<double>> all_pairs_distances(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<double>> rows(n);
    parallel_for(n, [&](std::size_t i) { rows[i] = sssp(g, static_cast<node_id>(i)).dist; });
    return rows;
}

}  // namespace czoo
