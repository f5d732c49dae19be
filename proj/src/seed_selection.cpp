#include "czoo/seed_selection.hpp"

#include <algorithm>
#include <cmath>

namespace czoo {

namespace {

std::size_t clamp_seed_count(const Graph& g, int k, SeedSet& out) {
    if (k < 0) throw_usage("bad-param", "seed count k must be >= 0");
    std::size_t n = g.node_count();
    auto want = (k == 0) ? n : static_cast<std::size_t>(k);
    if (want > n) {
        out.warn("requested " + std::to_string(want) + " seeds from a graph with " +
                 std::to_string(n) + " nodes; truncating");
        want = n;
    }
    out.requested = want;
    return want;
}

// Highest score wins; ties go to the lowest node id.
std::size_t argmax_lowest_id(const std::vector<double>& scores, const std::vector<char>& out) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (out[i]) continue;
        if (best == SIZE_MAX || scores[i] > scores[best]) best = i;
    }
    return best;
}

double average_degree_attenuation(const Graph& g) {
    if (g.edge_count() == 0) return 0.0;
    double avg = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
    return 1.0 / avg;
}

}  // namespace

SeedSet voterank(const Graph& g, int k) {
    SeedSet seeds;
    seeds.measure = "voterank";
    std::size_t want = clamp_seed_count(g, k, seeds);
    const std::size_t n = g.node_count();
    const double f = average_degree_attenuation(g);
    std::vector<double> ability(n, 1.0);
    std::vector<double> score(n, 0.0);
    std::vector<char> elected(n, 0);
    for (std::size_t round = 0; round < want; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
                s += ability[static_cast<std::size_t>(nb.node)];
            score[i] = s;
        }
        std::size_t win = argmax_lowest_id(score, elected);
        elected[win] = 1;
        seeds.nodes.push_back(static_cast<node_id>(win));
        seeds.scores.push_back(score[win]);
        ability[win] = 0.0;
        for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(win))) {
            auto j = static_cast<std::size_t>(nb.node);
            ability[j] = std::max(0.0, ability[j] - f);
        }
    }
    return seeds;
}

SeedSet wvoterank(const Graph& g, int k) {
    SeedSet seeds;
    seeds.measure = "wvoterank";
    std::size_t want = clamp_seed_count(g, k, seeds);
    const std::size_t n = g.node_count();
    const double f = average_degree_attenuation(g);
    std::vector<double> ability(n, 1.0);
    std::vector<double> score(n, 0.0);
    std::vector<char> elected(n, 0);
    for (std::size_t round = 0; round < want; ++round) {
        for (std::size_t i = 0; i < n; ++i) {
            double votes = 0.0;
            for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(i)))
                votes += nb.weight * ability[static_cast<std::size_t>(nb.node)];
            score[i] = std::sqrt(static_cast<double>(g.degree(static_cast<node_id>(i))) * votes);
        }
        std::size_t win = argmax_lowest_id(score, elected);
        elected[win] = 1;
        seeds.nodes.push_back(static_cast<node_id>(win));
        seeds.scores.push_back(score[win]);
        ability[win] = 0.0;
        // The voters for the winner are its in-neighbours.
        for (const Neighbor& nb : g.in_neighbors(static_cast<node_id>(win))) {
            auto j = static_cast<std::size_t>(nb.node);
            ability[j] = std::max(0.0, ability[j] - f);
        }
    }
    return seeds;
}

SeedSet degree_discount(const Graph& g, int k, double p) {
    if (!(p > 0.0 && p <= 1.0)) throw_usage("bad-param", "degree-discount requires 0 < p <= 1");
    SeedSet seeds;
    seeds.measure = "degree-discount";
    std::size_t want = clamp_seed_count(g, k, seeds);
    const std::size_t n = g.node_count();
    std::vector<double> dd(n, 0.0);
    std::vector<double> t(n, 0.0);
    std::vector<char> elected(n, 0);
    for (std::size_t i = 0; i < n; ++i) dd[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    for (std::size_t round = 0; round < want; ++round) {
        std::size_t win = argmax_lowest_id(dd, elected);
        elected[win] = 1;
        seeds.nodes.push_back(static_cast<node_id>(win));
        seeds.scores.push_back(dd[win]);
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(win))) {
            auto j = static_cast<std::size_t>(nb.node);
            if (elected[j]) continue;
            t[j] += 1.0;
            double d = static_cast<double>(g.degree(nb.node));
            dd[j] = d - 2.0 * t[j] - (d - t[j]) * t[j] * p;
        }
    }
    return seeds;
}

SeedSet single_discount(const Graph& g, int k) {
    SeedSet seeds;
    seeds.measure = "single-discount";
    std::size_t want = clamp_seed_count(g, k, seeds);
    const std::size_t n = g.node_count();
    std::vector<double> degree(n, 0.0);
    std::vector<char> elected(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        degree[i] = static_cast<double>(g.degree(static_cast<node_id>(i)));
    for (std::size_t round = 0; round < want; ++round) {
        std::size_t win = argmax_lowest_id(degree, elected);
        elected[win] = 1;
        seeds.nodes.push_back(static_cast<node_id>(win));
        seeds.scores.push_back(degree[win]);
        for (const Neighbor& nb : g.neighbors(static_cast<node_id>(win))) {
            auto j = static_cast<std::size_t>(nb.node);
            if (!elected[j]) degree[j] -= 1.0;
        }
    }
    return seeds;
}

}  // namespace czoo
