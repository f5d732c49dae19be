#pragma once

#include <random>
#include <string>
#include <vector>

#include "czoo/graph.hpp"

namespace fixtures {

// Canonical test graphs used across suites:
//   P3     path a-b-c
//   S4     star: center c plus leaves l1,l2,l3
//   K3     triangle
//   C4     4-cycle
//   LOLLI4 triangle a,b,c plus pendant d-c
//   K2     single edge
czoo::Graph p3();
czoo::Graph s4();
czoo::Graph k3();
czoo::Graph c4();
czoo::Graph lolli4();
czoo::Graph k2();

// Edge-list texts for the same fixtures (labels as above).
extern const char* kP3Text;
extern const char* kS4Text;
extern const char* kK3Text;
extern const char* kC4Text;
extern const char* kLolli4Text;
extern const char* kK2Text;

struct NamedFixture {
    std::string name;
    const czoo::Graph& graph;
};

// All six fixtures with names.
std::vector<NamedFixture> all();

// Undirected Erdos-Renyi G(n, p) with a fixed seed.
czoo::Graph random_graph(std::size_t n, double p, unsigned seed);

// Random connected graph: G(n, p) retried until connected (a random spanning
// tree is merged in when p is too sparse to connect within a few tries).
czoo::Graph random_connected_graph(std::size_t n, double p, unsigned seed);

// Uniform random labelled tree (Pruefer sequence).
czoo::Graph random_tree(std::size_t n, unsigned seed);

// Zachary karate club graph (34 nodes, 78 edges).
czoo::Graph karate();
extern const char* kKarateText;

}  // namespace fixtures
