#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <typeindex>
#include <unordered_map>
#include <vector>

#include "czoo/error.hpp"

namespace czoo {

using node_id = std::int64_t;

struct Neighbor {
    node_id node;
    double weight;
};

namespace detail {

// Type-keyed lazy cache attached to a Graph. Build happens at most once per
// type; readers share the built value. Safe for concurrent use on an
// otherwise immutable graph.
class TypeCache {
public:
    TypeCache() = default;
    // Caches never transfer between graphs; copies and moves start empty.
    TypeCache(const TypeCache&) noexcept {}
    TypeCache(TypeCache&&) noexcept {}
    TypeCache& operator=(const TypeCache&) noexcept { return *this; }
    TypeCache& operator=(TypeCache&&) noexcept { return *this; }

    template <class T, class Build>
    const T& get_or_build(Build&& build) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = slots_.find(std::type_index(typeid(T)));
        if (it == slots_.end()) {
            auto value = std::make_shared<T>(build());
            it = slots_.emplace(std::type_index(typeid(T)), std::move(value)).first;
        }
        return *static_cast<const T*>(it->second.get());
    }

private:
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::type_index, std::shared_ptr<void>> slots_;
};

}  // namespace detail

// Immutable node/edge store. Nodes are dense ids 0..N-1 in first-appearance
// order; external labels are kept for re-labelling outputs. Parallel edges
// are merged (weights summed) and self-loops are never stored, so the graph
// always corresponds to a plain adjacency matrix with zero diagonal.
class Graph {
public:
    struct Edge {
        node_id source;
        node_id target;
        double weight;
    };

    Graph() = default;

    // `edges` may contain duplicates (merged by weight summation) but no
    // self-loops and no non-positive weights; both are rejected here.
    Graph(std::size_t node_count, std::vector<Edge> edges, bool directed,
          std::vector<std::string> labels = {});

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }

    // True when every stored weight equals 1.
    bool unit_weights() const noexcept { return unit_weights_; }

    std::span<const Neighbor> out_neighbors(node_id u) const {
        return {adj_out_.data() + offsets_out_[static_cast<std::size_t>(u)],
                adj_out_.data() + offsets_out_[static_cast<std::size_t>(u) + 1]};
    }
    std::span<const Neighbor> in_neighbors(node_id u) const {
        if (!directed_) return out_neighbors(u);
        return {adj_in_.data() + offsets_in_[static_cast<std::size_t>(u)],
                adj_in_.data() + offsets_in_[static_cast<std::size_t>(u) + 1]};
    }
    // Union of in- and out-neighbourhoods for directed graphs; equal to
    // out_neighbors on undirected ones.
    std::span<const Neighbor> neighbors(node_id u) const {
        if (!directed_) return out_neighbors(u);
        return {adj_total_.data() + offsets_total_[static_cast<std::size_t>(u)],
                adj_total_.data() + offsets_total_[static_cast<std::size_t>(u) + 1]};
    }

    std::size_t out_degree(node_id u) const {
        return offsets_out_[static_cast<std::size_t>(u) + 1] - offsets_out_[static_cast<std::size_t>(u)];
    }
    std::size_t in_degree(node_id u) const {
        if (!directed_) return out_degree(u);
        return offsets_in_[static_cast<std::size_t>(u) + 1] - offsets_in_[static_cast<std::size_t>(u)];
    }
    // Undirected degree / directed total degree (distinct neighbours either way).
    std::size_t degree(node_id u) const {
        if (!directed_) return out_degree(u);
        return offsets_total_[static_cast<std::size_t>(u) + 1] - offsets_total_[static_cast<std::size_t>(u)];
    }

    double out_strength(node_id u) const { return strength_out_[static_cast<std::size_t>(u)]; }
    double in_strength(node_id u) const {
        return directed_ ? strength_in_[static_cast<std::size_t>(u)] : strength_out_[static_cast<std::size_t>(u)];
    }

    bool has_edge(node_id u, node_id v) const;
    double edge_weight(node_id u, node_id v) const;  // 0 when absent

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::string& label(node_id u) const { return labels_[static_cast<std::size_t>(u)]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Undirected connectivity / directed strong connectivity.
    bool connected() const;

    bool valid_node(node_id u) const noexcept {
        return u >= 0 && static_cast<std::size_t>(u) < n_;
    }
    void require_node(node_id u) const {
        if (!valid_node(u)) throw_usage("invalid-node", "node id out of range");
    }

    // Shared lazily-built per-graph artifacts (spectra, factorizations, ...).
    template <class T, class Build>
    const T& cached(Build&& build) const {
        return cache_.get_or_build<T>(std::forward<Build>(build));
    }

private:
    std::size_t n_ = 0;
    bool directed_ = false;
    bool unit_weights_ = true;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_out_, offsets_in_, offsets_total_;
    std::vector<Neighbor> adj_out_, adj_in_, adj_total_;
    std::vector<double> strength_out_, strength_in_;
    std::vector<std::string> labels_;
    detail::TypeCache cache_;
};

// Convenience constructor used heavily in tests: undirected unit-weight graph
// from an edge list over nodes 0..n-1.
Graph make_graph(std::size_t n, const std::vector<std::pair<node_id, node_id>>& edges,
                 bool directed = false);

}  // namespace czoo
