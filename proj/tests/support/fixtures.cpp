#include "support/fixtures.hpp"

#include "czoo/edge_list.hpp"

namespace fixtures {

using czoo::Graph;

const char* kP3Text = "a b\nb c\n";
const char* kS4Text = "c l1\nc l2\nc l3\n";
const char* kK3Text = "a b\nb c\na c\n";
const char* kC4Text = "a b\nb c\nc d\nd a\n";
const char* kLolli4Text = "a b\nb c\na c\nc d\n";
const char* kK2Text = "a b\n";

namespace {

Graph from_text(const char* text) {
    return czoo::parse_edge_list(text).graph;
}

}  // namespace

Graph p3() { return from_text(kP3Text); }
Graph s4() { return from_text(kS4Text); }
Graph k3() { return from_text(kK3Text); }
Graph c4() { return from_text(kC4Text); }
Graph lolli4() { return from_text(kLolli4Text); }
Graph k2() { return from_text(kK2Text); }

std::vector<NamedFixture> all() {
    static const Graph g_p3 = p3();
    static const Graph g_s4 = s4();
    static const Graph g_k3 = k3();
    static const Graph g_c4 = c4();
    static const Graph g_lolli4 = lolli4();
    static const Graph g_k2 = k2();
    return {{"P3", g_p3},     {"S4", g_s4}, {"K3", g_k3},
            {"C4", g_c4},     {"LOLLI4", g_lolli4}, {"K2", g_k2}};
}

Graph random_graph(std::size_t n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<czoo::node_id, czoo::node_id>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                edges.emplace_back(static_cast<czoo::node_id>(i), static_cast<czoo::node_id>(j));
    return czoo::make_graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, unsigned seed) {
    for (unsigned attempt = 0; attempt < 8; ++attempt) {
        Graph g = random_graph(n, p, seed + 1000 * attempt);
        if (g.connected()) return g;
    }
    // Merge in a random spanning tree to force connectivity.
    std::mt19937 rng(seed + 99991);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<czoo::node_id, czoo::node_id>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                edges.emplace_back(static_cast<czoo::node_id>(i), static_cast<czoo::node_id>(j));
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        edges.emplace_back(static_cast<czoo::node_id>(pick(rng)), static_cast<czoo::node_id>(v));
    }
    return czoo::make_graph(n, edges);
}

Graph random_tree(std::size_t n, unsigned seed) {
    if (n <= 1) return czoo::make_graph(n, {});
    if (n == 2) return czoo::make_graph(2, {{0, 1}});
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> pruefer(n - 2);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : pruefer) ++degree[x];
    std::vector<std::pair<czoo::node_id, czoo::node_id>> edges;
    std::vector<bool> used(n, false);
    for (std::size_t x : pruefer) {
        for (std::size_t leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(static_cast<czoo::node_id>(leaf), static_cast<czoo::node_id>(x));
                used[leaf] = true;
                --degree[x];
                break;
            }
        }
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) last.push_back(v);
    edges.emplace_back(static_cast<czoo::node_id>(last[0]), static_cast<czoo::node_id>(last[1]));
    return czoo::make_graph(n, edges);
}

// 0-indexed edge list of the 34-node karate club network.
const char* kKarateText =
    "0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n0 10\n0 11\n0 12\n0 13\n0 17\n0 19\n0 21\n0 31\n"
    "1 2\n1 3\n1 7\n1 13\n1 17\n1 19\n1 21\n1 30\n"
    "2 3\n2 7\n2 8\n2 9\n2 13\n2 27\n2 28\n2 32\n"
    "3 7\n3 12\n3 13\n"
    "4 6\n4 10\n"
    "5 6\n5 10\n5 16\n"
    "6 16\n"
    "8 30\n8 32\n8 33\n"
    "9 33\n"
    "13 33\n"
    "14 32\n14 33\n"
    "15 32\n15 33\n"
    "18 32\n18 33\n"
    "19 33\n"
    "20 32\n20 33\n"
    "22 32\n22 33\n"
    "23 25\n23 27\n23 29\n23 32\n23 33\n"
    "24 25\n24 27\n24 31\n"
    "25 31\n"
    "26 29\n26 33\n"
    "27 33\n"
    "28 31\n28 33\n"
    "29 32\n29 33\n"
    "30 32\n30 33\n"
    "31 32\n31 33\n"
    "32 33\n";

Graph karate() { return from_text(kKarateText); }

}  // namespace fixtures
