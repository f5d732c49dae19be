#include <doctest.h>

#include <algorithm>
#include <set>

#include "czoo/edge_list.hpp"
#include "czoo/geodesic.hpp"
#include "czoo/graph_measures.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace czoo;

TEST_CASE("edge list loading") {
    SUBCASE("two lines build a path graph with preserved labels") {
        auto loaded = parse_edge_list("a b\nb c\n");
        CHECK(loaded.graph.node_count() == 3);
        CHECK(loaded.graph.edge_count() == 2);
        CHECK(loaded.graph.label(0) == "a");
        CHECK(loaded.graph.label(1) == "b");
        CHECK(loaded.graph.label(2) == "c");
        CHECK_FALSE(loaded.graph.directed());
    }
    SUBCASE("empty file gives the empty graph") {
        auto loaded = parse_edge_list("");
        CHECK(loaded.graph.node_count() == 0);
        CHECK(loaded.graph.edge_count() == 0);
    }
    SUBCASE("parallel edges merge by weight summation") {
        LoadOptions opt;
        opt.weighted = true;
        auto loaded = parse_edge_list("a b 2\na b 3\n", opt);
        CHECK(loaded.graph.edge_count() == 1);
        CHECK(loaded.graph.edge_weight(0, 1) == doctest::Approx(5.0));
    }
    SUBCASE("comments and blank lines are skipped") {
        auto loaded = parse_edge_list("# header\n\na b # trailing\n");
        CHECK(loaded.graph.edge_count() == 1);
    }
    SUBCASE("malformed line reports its number") {
        CHECK_THROWS_WITH_AS(parse_edge_list("a b\nxyz\n"),
                             doctest::Contains(":2:"), error);
    }
    SUBCASE("non-positive weight is rejected") {
        LoadOptions opt;
        opt.weighted = true;
        CHECK_THROWS_AS(parse_edge_list("a b 0\n", opt), error);
        CHECK_THROWS_AS(parse_edge_list("a b -1\n", opt), error);
    }
    SUBCASE("self-loops drop with a warning by default") {
        auto loaded = parse_edge_list("a a\na b\n");
        CHECK(loaded.graph.edge_count() == 1);
        REQUIRE(loaded.warnings.size() == 1);
        CHECK(loaded.warnings[0].find("self-loop") != std::string::npos);
    }
    SUBCASE("strict mode rejects self-loops") {
        LoadOptions opt;
        opt.strict_loops = true;
        CHECK_THROWS_AS(parse_edge_list("a a\n", opt), error);
    }
    SUBCASE("invert-weights stores 1/w") {
        LoadOptions opt;
        opt.weighted = true;
        opt.invert_weights = true;
        auto loaded = parse_edge_list("a b 4\n", opt);
        CHECK(loaded.graph.edge_weight(0, 1) == doctest::Approx(0.25));
    }
    SUBCASE("unweighted load ignores a trailing weight column") {
        auto loaded = parse_edge_list("a b 7\n");
        CHECK(loaded.graph.edge_weight(0, 1) == doctest::Approx(1.0));
    }
    SUBCASE("directed load keeps direction") {
        LoadOptions opt;
        opt.directed = true;
        auto loaded = parse_edge_list("a b\n", opt);
        CHECK(loaded.graph.out_degree(0) == 1);
        CHECK(loaded.graph.out_degree(1) == 0);
        CHECK(loaded.graph.in_degree(1) == 1);
    }
}

TEST_CASE("degree") {
    auto s4 = fixtures::s4();
    auto deg = degree_centrality(s4);
    CHECK(deg.values[0] == 3.0);  // center appears first in the fixture
    CHECK(deg.values[1] == 1.0);

    auto k3 = fixtures::k3();
    for (double v : degree_centrality(k3).values) CHECK(v == 2.0);

    auto iso = make_graph(2, {});
    CHECK(degree_centrality(iso).values[0] == 0.0);

    SUBCASE("in/out on undirected warns and returns total") {
        auto d = degree_centrality(s4, degree_mode::in);
        CHECK(d.values[0] == 3.0);
        CHECK_FALSE(d.warnings.empty());
    }
    SUBCASE("directed modes") {
        auto g = parse_edge_list("a b\na c\nb c\n", {.directed = true}).graph;
        CHECK(degree_centrality(g, degree_mode::out).values[0] == 2.0);
        CHECK(degree_centrality(g, degree_mode::in).values[0] == 0.0);
        CHECK(degree_centrality(g, degree_mode::total).values[2] == 2.0);
    }
    SUBCASE("weighted degree sums weights") {
        auto g = parse_edge_list("a b 2.5\na c 1.5\n", {.weighted = true}).graph;
        CHECK(degree_centrality(g, degree_mode::total, true).values[0] == doctest::Approx(4.0));
    }
    SUBCASE("sum of degrees is twice the edge count") {
        for (unsigned seed = 0; seed < 5; ++seed) {
            auto g = fixtures::random_graph(20, 0.2, seed);
            double total = 0.0;
            for (double v : degree_centrality(g).values) total += v;
            CHECK(total == doctest::Approx(2.0 * static_cast<double>(g.edge_count())));
        }
    }
}

TEST_CASE("degree mass") {
    SUBCASE("m = 0 equals degree") {
        for (const auto& f : fixtures::all()) {
            auto dm = degree_mass(f.graph, 0);
            auto d = degree_centrality(f.graph);
            for (std::size_t i = 0; i < dm.size(); ++i)
                CHECK(dm.values[i] == doctest::Approx(d.values[i]).epsilon(1e-12));
        }
    }
    SUBCASE("m = 1 on P3 matches the dense matrix-power oracle") {
        auto p3 = fixtures::p3();
        auto dm = degree_mass(p3, 1);
        auto oracle = naive::degree_mass(p3, 1);
        for (std::size_t i = 0; i < dm.size(); ++i)
            CHECK(dm.values[i] == doctest::Approx(oracle[i]).epsilon(1e-12));
        // By hand: center row of A^1+A^2 sums to 2 + 2 = 4.
        CHECK(dm.values[1] == doctest::Approx(4.0));
    }
    SUBCASE("edgeless graph is all zero for any m") {
        auto g = make_graph(4, {});
        for (int m : {0, 1, 5}) {
            for (double v : degree_mass(g, m).values) CHECK(v == 0.0);
        }
    }
    SUBCASE("monotone nondecreasing in m on connected graphs") {
        auto g = fixtures::random_connected_graph(15, 0.2, 7);
        auto prev = degree_mass(g, 0);
        for (int m = 1; m <= 4; ++m) {
            auto next = degree_mass(g, m);
            for (std::size_t i = 0; i < next.size(); ++i) CHECK(next.values[i] >= prev.values[i]);
            prev = next;
        }
    }
    SUBCASE("matches the dense oracle on random graphs") {
        for (unsigned seed = 0; seed < 10; ++seed) {
            auto g = fixtures::random_graph(12, 0.3, seed);
            for (int m : {0, 1, 2, 3}) {
                auto got = degree_mass(g, m);
                auto want = naive::degree_mass(g, m);
                for (std::size_t i = 0; i < got.size(); ++i)
                    CHECK(got.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("clustering coefficient") {
    for (double v : clustering_coefficient(fixtures::k3()).values) CHECK(v == doctest::Approx(1.0));
    CHECK(clustering_coefficient(fixtures::s4()).values[0] == 0.0);

    auto lolli = fixtures::lolli4();
    // Node c (index 2) has neighbors {a, b, d}; only a-b is present.
    CHECK(clustering_coefficient(lolli).values[2] == doctest::Approx(1.0 / 3.0));

    SUBCASE("directed input is a contract violation") {
        auto g = parse_edge_list("a b\n", {.directed = true}).graph;
        CHECK_THROWS_AS(clustering_coefficient(g), error);
    }
    SUBCASE("bounded by [0, 1] and equal to the naive count") {
        for (unsigned seed = 0; seed < 10; ++seed) {
            auto g = fixtures::random_graph(18, 0.3, 100 + seed);
            auto got = clustering_coefficient(g);
            auto want = naive::clustering(g);
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got.values[i] >= 0.0);
                CHECK(got.values[i] <= 1.0);
                CHECK(got.values[i] == doctest::Approx(want[i]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("khop sets") {
    auto p3 = fixtures::p3();
    SUBCASE("P3 endpoint within 2 reaches both others") {
        auto within = khop_set(p3, 0, 2, khop_mode::within);
        CHECK(within == std::vector<node_id>{1, 2});
        auto exact = khop_set(p3, 0, 2, khop_mode::exact);
        CHECK(exact == std::vector<node_id>{2});
    }
    SUBCASE("disconnected pair stays empty") {
        auto g = make_graph(2, {});
        CHECK(khop_set(g, 0, 3, khop_mode::within).empty());
    }
    SUBCASE("k < 1 is an argument error") {
        CHECK_THROWS_AS(khop_set(p3, 0, 0, khop_mode::within), error);
    }
    SUBCASE("within-k is the union of exact-r for r <= k") {
        for (unsigned seed = 0; seed < 8; ++seed) {
            auto g = fixtures::random_graph(25, 0.12, 300 + seed);
            for (node_id i : {node_id(0), node_id(5), node_id(24)}) {
                for (int k = 1; k <= 4; ++k) {
                    std::set<node_id> expected;
                    for (int r = 1; r <= k; ++r) {
                        auto exact = khop_set(g, i, r, khop_mode::exact);
                        expected.insert(exact.begin(), exact.end());
                    }
                    auto within = khop_set(g, i, k, khop_mode::within);
                    CHECK(std::set<node_id>(within.begin(), within.end()) == expected);
                }
            }
        }
    }
}
