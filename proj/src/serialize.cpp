#include "czoo/serialize.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace czoo {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const char* sentinel(entry_state s) {
    return s == entry_state::neg_infinity ? "disconnects" : "undefined";
}

std::string scores_csv(const ScoreVector& sv, const Graph& g) {
    std::string out = "node,score\n";
    for (std::size_t i = 0; i < sv.size(); ++i) {
        out += g.label(static_cast<node_id>(i));
        out += ',';
        out += sv.defined(i) ? fixed6(sv.values[i]) : sentinel(sv.state(i));
        out += '\n';
    }
    return out;
}

std::string seeds_csv(const SeedSet& seeds, const Graph& g) {
    std::string out = "rank,node,score\n";
    for (std::size_t r = 0; r < seeds.size(); ++r) {
        out += std::to_string(r + 1);
        out += ',';
        out += g.label(seeds.nodes[r]);
        out += ',';
        out += fixed6(seeds.scores[r]);
        out += '\n';
    }
    return out;
}

std::string decomposition_csv(const Decomposition& d, const Graph& g) {
    std::string out = "node,core,layer\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        out += g.label(static_cast<node_id>(i));
        out += ',';
        out += fixed6(d.core[i]);
        out += ',';
        out += std::to_string(d.layer[i]);
        out += '\n';
    }
    return out;
}

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const std::map<std::string, std::string>& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

ordered_json base_json(const std::string& measure, const std::map<std::string, std::string>& params,
                       const std::vector<std::string>& warnings) {
    ordered_json j;
    j["measure"] = measure;
    j["params"] = params_json(params);
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
}

}  // namespace

std::string to_csv(const MeasureResult& result, const Graph& g) {
    return std::visit(
        [&](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ScoreVector>) return scores_csv(r, g);
            else if constexpr (std::is_same_v<T, SeedSet>) return seeds_csv(r, g);
            else return decomposition_csv(r, g);
        },
        result);
}

std::string to_json(const MeasureResult& result, const Graph& g) {
    ordered_json j = std::visit(
        [&](const auto& r) -> ordered_json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ScoreVector>) {
                ordered_json out = base_json(r.measure, r.params, r.warnings);
                for (const auto& [k, v] : r.extras) out[k] = v;
                ordered_json scores = ordered_json::object();
                for (std::size_t i = 0; i < r.size(); ++i) {
                    const auto& label = g.label(static_cast<node_id>(i));
                    switch (r.state(i)) {
                        case entry_state::defined: scores[label] = r.values[i]; break;
                        case entry_state::undefined: scores[label] = nullptr; break;
                        case entry_state::neg_infinity: scores[label] = "disconnects"; break;
                    }
                }
                out["scores"] = std::move(scores);
                return out;
            } else if constexpr (std::is_same_v<T, SeedSet>) {
                ordered_json out = base_json(r.measure, r.params, r.warnings);
                ordered_json seeds = ordered_json::array();
                for (std::size_t i = 0; i < r.size(); ++i) {
                    seeds.push_back({{"rank", i + 1},
                                     {"node", g.label(r.nodes[i])},
                                     {"score", r.scores[i]}});
                }
                out["seeds"] = std::move(seeds);
                return out;
            } else {
                ordered_json out = base_json(r.measure, r.params, r.warnings);
                ordered_json nodes = ordered_json::object();
                for (std::size_t i = 0; i < r.size(); ++i) {
                    nodes[g.label(static_cast<node_id>(i))] = {{"core", r.core[i]},
                                                               {"layer", r.layer[i]}};
                }
                out["nodes"] = std::move(nodes);
                return out;
            }
        },
        result);
    return j.dump(2) + "\n";
}

std::string serialize(const MeasureResult& result, const Graph& g, output_format format) {
    return format == output_format::csv ? to_csv(result, g) : to_json(result, g);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io("io-error", "cannot open \"" + path + "\" for writing");
    out << contents;
    if (!out) throw_io("io-error", "failed writing \"" + path + "\"");
}

}  // namespace czoo
