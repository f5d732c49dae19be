#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "czoo/graph.hpp"

namespace czoo {

// Per-node entry state. `neg_infinity` is the vitality sentinel for "removal
// disconnects the graph"; it is never emitted as a floating infinity.
enum class entry_state : std::uint8_t { defined = 0, undefined = 1, neg_infinity = 2 };

// Named per-node real scores, the universal measure output.
struct ScoreVector {
    std::string measure;
    std::map<std::string, std::string> params;
    std::vector<double> values;
    std::vector<entry_state> states;  // empty means all defined
    std::map<std::string, double> extras;  // graph-level scalars (e.g. global bipartivity)
    std::vector<std::string> warnings;

    static ScoreVector zeros(std::string name, std::size_t n) {
        ScoreVector sv;
        sv.measure = std::move(name);
        sv.values.assign(n, 0.0);
        return sv;
    }

    std::size_t size() const noexcept { return values.size(); }

    entry_state state(std::size_t i) const {
        return states.empty() ? entry_state::defined : states[i];
    }
    bool defined(std::size_t i) const { return state(i) == entry_state::defined; }

    void mark(std::size_t i, entry_state s) {
        if (states.empty()) states.assign(values.size(), entry_state::defined);
        states[i] = s;
        values[i] = std::numeric_limits<double>::quiet_NaN();
    }

    void warn(std::string message) { warnings.push_back(std::move(message)); }
};

// Ordered spreader selection; scores are recorded at election time, before
// the elected node's ability is zeroed.
struct SeedSet {
    std::string measure;
    std::map<std::string, std::string> params;
    std::vector<node_id> nodes;
    std::vector<double> scores;
    std::size_t requested = 0;
    std::vector<std::string> warnings;

    std::size_t size() const noexcept { return nodes.size(); }
};

// Per-node (core, layer) pair from a peeling process. Cores are integers for
// plain k-shell peeling but may be fractional for mixed-degree variants, so
// they are stored as reals. `round_in_core` restarts at 1 whenever the core
// threshold moves; `layer` is the global peeling round (the onion layer).
struct Decomposition {
    std::string measure;
    std::map<std::string, std::string> params;
    std::vector<double> core;
    std::vector<int> layer;
    std::vector<int> round_in_core;
    std::vector<std::string> warnings;

    std::size_t size() const noexcept { return core.size(); }
};

using MeasureResult = std::variant<ScoreVector, SeedSet, Decomposition>;

enum class result_kind : int { scores = 0, seedset = 1, decomposition = 2 };

inline result_kind kind_of(const MeasureResult& r) {
    return static_cast<result_kind>(r.index());
}

}  // namespace czoo
