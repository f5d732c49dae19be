#include "czoo/distance_measures.hpp"

#include <cmath>

#include "czoo/parallel.hpp"

namespace czoo {

namespace {

// Finds one witness pair in different components for error messages.
std::string disconnected_witness(const Graph& g) {
    if (g.node_count() == 0) return "";
    auto r = sssp(g, 0);
    for (std::size_t v = 1; v < g.node_count(); ++v) {
        if (r.dist[v] == kInfDist)
            return "\"" + g.label(0) + "\" and \"" + g.label(static_cast<node_id>(v)) +
                   "\" are not mutually reachable";
    }
    // Directed case: 0 reaches everyone but not vice versa.
    for (std::size_t s = 1; s < g.node_count(); ++s) {
        auto rs = sssp(g, static_cast<node_id>(s));
        for (std::size_t v = 0; v < g.node_count(); ++v) {
            if (rs.dist[v] == kInfDist)
                return "\"" + g.label(static_cast<node_id>(s)) + "\" cannot reach \"" +
                       g.label(static_cast<node_id>(v)) + "\"";
        }
    }
    return "";
}

void require_connected(const Graph& g, const char* measure) {
    if (!g.connected()) {
        throw_requirement("requires-connected", std::string(measure) +
                                                    " is defined only for connected graphs: " +
                                                    disconnected_witness(g));
    }
}

// Applies fn(i, dist_row) for every source in parallel.
template <class Fn>
void for_each_distance_row(const Graph& g, Fn&& fn) {
    parallel_for(g.node_count(), [&](std::size_t i) {
        auto r = sssp(g, static_cast<node_id>(i));
        fn(i, r.dist);
    });
}

}  // namespace

ScoreVector closeness(const Graph& g) {
    require_connected(g, "closeness");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("closeness", n);
    if (n == 1) {
        sv.warn("single-node graph; closeness set to 0");
        return sv;
    }
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += dist[j];
        sv.values[i] = static_cast<double>(n - 1) / sum;
    });
    return sv;
}

ScoreVector harmonic(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("harmonic", n);
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dist[j] != kInfDist) sum += 1.0 / dist[j];
        sv.values[i] = sum;
    });
    return sv;
}

ScoreVector eccentricity_centrality(const Graph& g) {
    require_connected(g, "eccentricity");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("eccentricity", n);
    if (n == 1) {
        sv.warn("single-node graph; eccentricity centrality set to 0");
        return sv;
    }
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double ecc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) ecc = std::max(ecc, dist[j]);
        sv.values[i] = 1.0 / ecc;
    });
    return sv;
}

ScoreVector lin_index(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("lin-index", n);
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        double reach = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || dist[j] == kInfDist) continue;
            sum += dist[j];
            reach += 1.0;
        }
        sv.values[i] = (reach == 0.0) ? 1.0 : reach * reach / sum;
    });
    return sv;
}

ScoreVector decay(const Graph& g, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw_usage("bad-param", "decay requires 0 < delta < 1");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("decay", n);
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dist[j] != kInfDist) sum += std::pow(delta, dist[j]);
        sv.values[i] = sum;
    });
    return sv;
}

ScoreVector radiality(const Graph& g) {
    require_connected(g, "radiality");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("radiality", n);
    if (n == 1) {
        sv.warn("single-node graph; radiality set to 0");
        return sv;
    }
    double diameter = apsp_summary(g).diameter;
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += diameter + 1.0 - dist[j];
        sv.values[i] = sum / static_cast<double>(n - 1);
    });
    return sv;
}

ScoreVector delta_closeness(const Graph& g, double delta) {
    if (delta <= 0.0) require_connected(g, "delta-closeness");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("delta-closeness", n);
    if (n == 1) {
        sv.warn("single-node graph; delta-closeness set to 0");
        return sv;
    }
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (dist[j] == kInfDist) continue;  // only possible for delta > 0
            sum += std::pow(dist[j], -delta);
        }
        sv.values[i] = sum / static_cast<double>(n - 1);
    });
    return sv;
}

ScoreVector p_means(const Graph& g, double p) {
    require_connected(g, "p-means");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("p-means", n);
    if (n == 1) {
        sv.warn("single-node graph; p-means set to 0");
        return sv;
    }
    for_each_distance_row(g, [&](std::size_t i, const std::vector<double>& dist) {
        if (p == 0.0) {
            // Geometric-mean branch, computed in log space.
            double log_sum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) log_sum += std::log(dist[j]);
            sv.values[i] = std::exp(-log_sum / static_cast<double>(n - 1));
        } else {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += std::pow(dist[j], p);
            sv.values[i] = std::pow(sum / static_cast<double>(n - 1), -1.0 / p);
        }
    });
    return sv;
}

ScoreVector m_reach(const Graph& g, int m) {
    if (m < 1) throw_usage("bad-param", "m-reach requires m >= 1");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("m-reach", n);
    parallel_for(n, [&](std::size_t i) {
        auto dist = hop_distances(g, static_cast<node_id>(i));
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dist[j] >= 1 && dist[j] <= m) ++count;
        sv.values[i] = static_cast<double>(count);
    });
    return sv;
}

ScoreVector local_reaching(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("local-reaching", n);
    if (n <= 1) {
        sv.warn("graph has fewer than two nodes; local reaching set to 0");
        return sv;
    }
    parallel_for(n, [&](std::size_t i) {
        auto dist = hop_distances(g, static_cast<node_id>(i));
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dist[j] >= 0) ++count;
        sv.values[i] = static_cast<double>(count) / static_cast<double>(n - 1);
    });
    return sv;
}

ScoreVector geodesic_kpath(const Graph& g, int k) {
    if (k < 1) throw_usage("bad-param", "geodesic-k-path requires k >= 1");
    if (!g.unit_weights())
        throw_requirement("requires-unit-weights",
                          "geodesic-k-path counts hops and needs unit weights");
    const std::size_t n = g.node_count();
    auto sv = ScoreVector::zeros("geodesic-k-path", n);
    parallel_for(n, [&](std::size_t i) {
        auto r = sssp(g, static_cast<node_id>(i));
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || r.dist[j] == kInfDist) continue;
            if (r.dist[j] >= 1.0 && r.dist[j] <= static_cast<double>(k)) total += r.sigma[j];
        }
        sv.values[i] = total;
    });
    return sv;
}

}  // namespace czoo
