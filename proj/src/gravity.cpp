#include "czoo/gravity.hpp"

#include <atomic>
#include <cmath>

#include "czoo/decomposition.hpp"
#include "czoo/geodesic.hpp"
#include "czoo/parallel.hpp"

namespace czoo {

namespace {

// Shared kernel: c(i) = sum over j in the <= radius hop ball of
// mass_i(i) * mass_j(j) / d_ij^2. radius < 0 means no truncation.
ScoreVector gravity_kernel(const Graph& g, const char* name,
                           const std::vector<double>& focal_mass,
                           const std::vector<double>& neighbor_mass, int radius) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros(name, n);
    std::atomic<bool> saw_unreachable{false};
    parallel_for(n, [&](std::size_t i) {
        auto r = sssp(g, static_cast<node_id>(i));
        std::vector<int> hops;
        if (radius >= 0 && !g.unit_weights()) hops = hop_distances(g, static_cast<node_id>(i));
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (r.dist[j] == kInfDist) {
                saw_unreachable.store(true, std::memory_order_relaxed);
                continue;
            }
            if (radius >= 0) {
                int hop = g.unit_weights() ? static_cast<int>(r.dist[j]) : hops[j];
                if (hop < 0 || hop > radius) continue;
            }
            sum += focal_mass[i] * neighbor_mass[j] / (r.dist[j] * r.dist[j]);
        }
        sv.values[i] = sum;
    });
    if (saw_unreachable.load())
        sv.warn("graph is not connected; unreachable pairs contribute 0");
    return sv;
}

std::vector<double> degrees(const Graph& g) {
    std::vector<double> d(g.node_count());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    return d;
}

}  // namespace

ScoreVector gravity_model(const Graph& g) {
    auto d = degrees(g);
    return gravity_kernel(g, "gravity-model", d, d, -1);
}

ScoreVector local_gravity(const Graph& g, int radius) {
    if (radius < 1) throw_usage("bad-param", "local-gravity requires radius >= 1");
    auto d = degrees(g);
    return gravity_kernel(g, "local-gravity", d, d, radius);
}

ScoreVector gravity_centrality(const Graph& g, int radius) {
    if (g.directed())
        throw_requirement("requires-undirected", "gravity centrality expects an undirected graph");
    if (radius < 1) throw_usage("bad-param", "gravity-centrality requires radius >= 1");
    const auto& cores = cached_kshell(g).core;
    return gravity_kernel(g, "gravity-centrality", cores, cores, radius);
}

ScoreVector mixed_gravitational(const Graph& g) {
    if (g.directed())
        throw_requirement("requires-undirected",
                          "mixed gravitational centrality expects an undirected graph");
    const auto& cores = cached_kshell(g).core;
    // The d_ij^2 term is kept even though 1-hop neighbors sit at distance 1
    // on unit-weight graphs; it matters for weighted distances.
    return gravity_kernel(g, "mixed-gravitational", cores, degrees(g), 1);
}

}  // namespace czoo
