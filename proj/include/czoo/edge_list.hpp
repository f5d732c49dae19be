#pragma once

#include <string>
#include <vector>

#include "czoo/graph.hpp"

namespace czoo {

// Edge-list loader options. The format is UTF-8 text, one edge per line
// "u<ws>v[<ws>w]"; '#' begins a comment line; node tokens are arbitrary
// non-whitespace strings.
struct LoadOptions {
    bool directed = false;
    // When false a trailing weight column is ignored and all edges get
    // weight 1.
    bool weighted = false;
    // Interpret weights as tie strengths and invert them to costs (w -> 1/w)
    // so that stronger connections are shorter for path algorithms.
    bool invert_weights = false;
    // Reject files containing self-loops instead of dropping them.
    bool strict_loops = false;
};

struct LoadResult {
    Graph graph;
    std::vector<std::string> warnings;
};

LoadResult load_edge_list(const std::string& path, const LoadOptions& options = {});

// Same parser over an in-memory buffer; `origin` appears in error messages.
LoadResult parse_edge_list(const std::string& text, const LoadOptions& options = {},
                           const std::string& origin = "<memory>");

}  // namespace czoo
