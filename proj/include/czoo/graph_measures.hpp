#pragma once

#include "czoo/graph.hpp"
#include "czoo/scores.hpp"

namespace czoo {

enum class degree_mode { total, in, out };

// c(i) = sum_j a_ij (or per-mode on directed graphs). With `weighted` the
// entries are link weights instead of 0/1.
ScoreVector degree_centrality(const Graph& g, degree_mode mode = degree_mode::total,
                              bool weighted = false);

// m-th order degree mass: c(i) = sum_{k=1..m+1} (A^k 1)_i via repeated
// sparse matrix-vector products. m = 0 reduces to degree.
ScoreVector degree_mass(const Graph& g, int m);

// Fraction of ordered neighbor pairs that are themselves linked; 0 when
// degree <= 1. Undirected only.
ScoreVector clustering_coefficient(const Graph& g);

}  // namespace czoo
