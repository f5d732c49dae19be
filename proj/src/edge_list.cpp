#include "czoo/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace czoo {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

LoadResult parse_edge_list(const std::string& text, const LoadOptions& options,
                           const std::string& origin) {
    std::vector<Graph::Edge> edges;
    std::vector<std::string> labels;
    std::unordered_map<std::string, node_id> ids;
    std::vector<std::string> warnings;
    std::size_t dropped_loops = 0;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<node_id>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw_io("parse-error", origin + ":" + std::to_string(line_no) +
                                        ": expected \"u v\" or \"u v w\"");
        }
        double weight = 1.0;
        if (options.weighted && tokens.size() == 3) {
            const std::string& ws = tokens[2];
            const char* begin = ws.data();
            const char* end = ws.data() + ws.size();
            auto [ptr, ec] = std::from_chars(begin, end, weight);
            if (ec != std::errc() || ptr != end) {
                throw_io("parse-error", origin + ":" + std::to_string(line_no) +
                                            ": bad weight \"" + ws + "\"");
            }
            if (!(weight > 0.0)) {
                throw_io("non-positive-weight", origin + ":" + std::to_string(line_no) +
                                                    ": weights must be strictly positive");
            }
            if (options.invert_weights) weight = 1.0 / weight;
        }
        node_id u = intern(tokens[0]);
        node_id v = intern(tokens[1]);
        if (u == v) {
            if (options.strict_loops) {
                throw_io("self-loop", origin + ":" + std::to_string(line_no) +
                                          ": self-loop on \"" + tokens[0] + "\"");
            }
            ++dropped_loops;
            continue;
        }
        edges.push_back({u, v, weight});
    }

    if (dropped_loops > 0)
        warnings.push_back("dropped " + std::to_string(dropped_loops) + " self-loop(s)");

    Graph graph(labels.size(), std::move(edges), options.directed, std::move(labels));
    return {std::move(graph), std::move(warnings)};
}

LoadResult load_edge_list(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("file-not-found", "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str(), options, path);
}

}  // namespace czoo
