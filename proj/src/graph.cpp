#include "czoo/graph.hpp"

#include <algorithm>
#include <map>

namespace czoo {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, bool directed,
             std::vector<std::string> labels)
    : n_(node_count), directed_(directed), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n_) throw_usage("bad-labels", "label count does not match node count");

    // Merge parallel edges; key is the ordered pair (canonical order for
    // undirected graphs).
    std::map<std::pair<node_id, node_id>, double> merged;
    for (const Edge& e : edges) {
        if (e.source == e.target) throw_usage("self-loop", "self-loops are not representable");
        if (!(e.weight > 0.0)) throw_usage("non-positive-weight", "edge weights must be positive");
        if (e.source < 0 || e.target < 0 || static_cast<std::size_t>(e.source) >= n_ ||
            static_cast<std::size_t>(e.target) >= n_)
            throw_usage("invalid-node", "edge endpoint out of range");
        auto key = std::make_pair(e.source, e.target);
        if (!directed_ && key.first > key.second) std::swap(key.first, key.second);
        merged[key] += e.weight;
    }
    edges_.reserve(merged.size());
    for (const auto& [key, w] : merged) {
        edges_.push_back({key.first, key.second, w});
        if (w != 1.0) unit_weights_ = false;
    }

    auto build_csr = [&](auto&& emit, std::vector<std::size_t>& offsets, std::vector<Neighbor>& adj) {
        std::vector<std::size_t> counts(n_ + 1, 0);
        emit([&](node_id u, node_id, double) { ++counts[static_cast<std::size_t>(u) + 1]; });
        offsets.assign(n_ + 1, 0);
        for (std::size_t i = 0; i < n_; ++i) offsets[i + 1] = offsets[i] + counts[i + 1];
        adj.resize(offsets[n_]);
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        emit([&](node_id u, node_id v, double w) {
            adj[cursor[static_cast<std::size_t>(u)]++] = Neighbor{v, w};
        });
        for (std::size_t u = 0; u < n_; ++u)
            std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[u]),
                      adj.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]),
                      [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    };

    build_csr(
        [&](auto&& f) {
            for (const Edge& e : edges_) {
                f(e.source, e.target, e.weight);
                if (!directed_) f(e.target, e.source, e.weight);
            }
        },
        offsets_out_, adj_out_);
    if (directed_) {
        build_csr(
            [&](auto&& f) {
                for (const Edge& e : edges_) f(e.target, e.source, e.weight);
            },
            offsets_in_, adj_in_);
        build_csr(
            [&](auto&& f) {
                for (const Edge& e : edges_) {
                    f(e.source, e.target, e.weight);
                    f(e.target, e.source, e.weight);
                }
            },
            offsets_total_, adj_total_);
        // A mutual pair u<->v appears twice in the total view; dedup it.
        std::vector<Neighbor> dedup;
        std::vector<std::size_t> offsets(n_ + 1, 0);
        for (std::size_t u = 0; u < n_; ++u) {
            auto begin = adj_total_.begin() + static_cast<std::ptrdiff_t>(offsets_total_[u]);
            auto end = adj_total_.begin() + static_cast<std::ptrdiff_t>(offsets_total_[u + 1]);
            for (auto it = begin; it != end; ++it) {
                if (it != begin && it->node == std::prev(it)->node) {
                    dedup.back().weight += it->weight;
                } else {
                    dedup.push_back(*it);
                }
            }
            offsets[u + 1] = dedup.size();
        }
        adj_total_ = std::move(dedup);
        offsets_total_ = std::move(offsets);
    }

    strength_out_.assign(n_, 0.0);
    for (std::size_t u = 0; u < n_; ++u)
        for (const Neighbor& nb : out_neighbors(static_cast<node_id>(u))) strength_out_[u] += nb.weight;
    if (directed_) {
        strength_in_.assign(n_, 0.0);
        for (std::size_t u = 0; u < n_; ++u)
            for (const Neighbor& nb : in_neighbors(static_cast<node_id>(u))) strength_in_[u] += nb.weight;
    }
}

bool Graph::has_edge(node_id u, node_id v) const {
    auto span = out_neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& a, node_id b) { return a.node < b; });
    return it != span.end() && it->node == v;
}

double Graph::edge_weight(node_id u, node_id v) const {
    auto span = out_neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& a, node_id b) { return a.node < b; });
    return (it != span.end() && it->node == v) ? it->weight : 0.0;
}

namespace {

// Iterative reachability sweep; `forward` selects edge direction.
std::size_t reach_count(const Graph& g, node_id start, bool forward) {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<node_id> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        node_id u = stack.back();
        stack.pop_back();
        auto span = forward ? g.out_neighbors(u) : g.in_neighbors(u);
        for (const Neighbor& nb : span) {
            if (!seen[static_cast<std::size_t>(nb.node)]) {
                seen[static_cast<std::size_t>(nb.node)] = 1;
                ++count;
                stack.push_back(nb.node);
            }
        }
    }
    return count;
}

}  // namespace

bool Graph::connected() const {
    if (n_ <= 1) return true;
    if (reach_count(*this, 0, true) != n_) return false;
    if (directed_ && reach_count(*this, 0, false) != n_) return false;
    return true;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<node_id, node_id>>& edges,
                 bool directed) {
    std::vector<Graph::Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back({u, v, 1.0});
    return Graph(n, std::move(es), directed);
}

}  // namespace czoo
