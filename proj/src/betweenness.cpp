#include "czoo/betweenness.hpp"

#include <cmath>

#include "czoo/geodesic.hpp"
#include "czoo/parallel.hpp"

namespace czoo {

namespace {

// Backward pass over one source's shortest-path DAG. `target_weight(t, d_st)`
// is the pair weight omega; the accumulated dependency at v is
//   delta(v) = sum_{w : v in preds(w)} (sigma_v / sigma_w) (omega(w) + delta(w)),
// which sums omega(t) * sigma_st(v)/sigma_st over all targets t.
template <class TargetWeight>
void accumulate_fractional(const GeodesicResult& r, const TargetWeight& target_weight,
                           std::vector<double>& acc) {
    const std::size_t n = r.dist.size();
    std::vector<double> delta(n, 0.0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        auto w = static_cast<std::size_t>(*it);
        double coeff = (target_weight(*it, r.dist[w]) + delta[w]) / r.sigma[w];
        for (node_id v : r.preds[w])
            delta[static_cast<std::size_t>(v)] += r.sigma[static_cast<std::size_t>(v)] * coeff;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (static_cast<node_id>(v) != r.source) acc[v] += delta[v];
}

// Stress variant: delta(v) = sigma_v * sum_{w : v in preds(w)} (1 + delta(w)/sigma_w),
// which sums sigma_st(v) over targets.
void accumulate_counts(const GeodesicResult& r, std::vector<double>& acc) {
    const std::size_t n = r.dist.size();
    std::vector<double> delta(n, 0.0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        auto w = static_cast<std::size_t>(*it);
        double coeff = 1.0 + delta[w] / r.sigma[w];
        for (node_id v : r.preds[w])
            delta[static_cast<std::size_t>(v)] += r.sigma[static_cast<std::size_t>(v)] * coeff;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (static_cast<node_id>(v) != r.source) acc[v] += delta[v];
}

ScoreVector finish(const Graph& g, std::string name, std::vector<double> values,
                   const BetweennessOptions& opt) {
    ScoreVector sv;
    sv.measure = std::move(name);
    sv.values = std::move(values);
    const double n = static_cast<double>(g.node_count());
    double scale = 1.0;
    if (opt.halve) scale *= 0.5;
    if (opt.normalize) {
        double pairs = (n - 1.0) * (n - 2.0);
        if (pairs > 0.0) scale /= pairs;
    }
    if (scale != 1.0)
        for (double& v : sv.values) v *= scale;
    return sv;
}

}  // namespace

ScoreVector betweenness(const Graph& g, const BetweennessOptions& opt) {
    const std::size_t n = g.node_count();
    auto values = parallel_accumulate(n, n, [&](std::size_t s, std::vector<double>& acc) {
        auto r = sssp(g, static_cast<node_id>(s));
        accumulate_fractional(r, [](node_id, double) { return 1.0; }, acc);
    });
    return finish(g, "betweenness", std::move(values), opt);
}

ScoreVector stress(const Graph& g, const BetweennessOptions& opt) {
    const std::size_t n = g.node_count();
    auto values = parallel_accumulate(n, n, [&](std::size_t s, std::vector<double>& acc) {
        auto r = sssp(g, static_cast<node_id>(s));
        accumulate_counts(r, acc);
    });
    return finish(g, "stress", std::move(values), opt);
}

ScoreVector k_betweenness(const Graph& g, int k, const BetweennessOptions& opt) {
    if (k < 1) throw_usage("bad-param", "k-betweenness requires k >= 1");
    if (!g.unit_weights())
        throw_requirement("requires-unit-weights",
                          "k-betweenness bounds hop length and needs unit weights");
    const std::size_t n = g.node_count();
    const double bound = static_cast<double>(k);
    auto values = parallel_accumulate(n, n, [&](std::size_t s, std::vector<double>& acc) {
        auto r = sssp(g, static_cast<node_id>(s));
        accumulate_fractional(r, [bound](node_id, double d) { return d <= bound ? 1.0 : 0.0; },
                              acc);
    });
    return finish(g, "k-betweenness", std::move(values), opt);
}

ScoreVector length_scaled_betweenness(const Graph& g, const BetweennessOptions& opt) {
    const std::size_t n = g.node_count();
    auto values = parallel_accumulate(n, n, [&](std::size_t s, std::vector<double>& acc) {
        auto r = sssp(g, static_cast<node_id>(s));
        accumulate_fractional(r, [](node_id, double d) { return d > 0.0 ? 1.0 / d : 0.0; }, acc);
    });
    return finish(g, "length-scaled-betweenness", std::move(values), opt);
}

ScoreVector endpoint_betweenness(const Graph& g, const BetweennessOptions& opt) {
    const std::size_t n = g.node_count();
    auto values = parallel_accumulate(n, n, [&](std::size_t s, std::vector<double>& acc) {
        auto r = sssp(g, static_cast<node_id>(s));
        accumulate_fractional(r, [](node_id, double) { return 1.0; }, acc);
        // Every reachable target contributes one full path through both of
        // its endpoints.
        double reached = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            if (t == s || r.dist[t] == kInfDist) continue;
            acc[t] += 1.0;
            reached += 1.0;
        }
        acc[s] += reached;
    });
    return finish(g, "endpoint-betweenness", std::move(values), opt);
}

}  // namespace czoo
