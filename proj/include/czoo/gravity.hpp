#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

// Gravity-family measures: mass(i) * mass(j) / d_ij^2 summed over a hop-count
// ball around i. Pairs in different components contribute nothing (infinite
// distance) and raise a one-time warning.

// Masses are degrees, full radius.
ScoreVector gravity_model(const Graph& g);

// Gravity sum restricted to the <= radius hop ball.
ScoreVector local_gravity(const Graph& g, int radius);

// Masses are k-shell indices, default radius 3. Undirected only.
ScoreVector gravity_centrality(const Graph& g, int radius = 3);

// Focal mass k-shell, neighbor mass degree, 1-hop neighbors only.
ScoreVector mixed_gravitational(const Graph& g);

}  // namespace czoo
