#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgs/taxonomy.hpp"
#include "hgs/util.hpp"

namespace hgs {

// Undirected simple graph whose nodes carry a taxonomy label.
// Node ids are dense 0..n-1. Immutable after construction.
class HeteroGraph {
public:
    struct BuildStats {
        std::size_t duplicate_edges_dropped = 0;
    };

    // Sorts adjacency, drops self-loops/duplicates (counted in stats).
    // Labels must resolve in the taxonomy used to produce them.
    static HeteroGraph build(std::uint32_t n, std::vector<LabelId> labels,
                             const std::vector<Edge>& edges, BuildStats* stats = nullptr);

    std::uint32_t n() const { return n_; }
    std::size_t m() const { return m_; }

    LabelId label(NodeId v) const { return labels_[v]; }
    const std::vector<LabelId>& labels() const { return labels_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    std::uint32_t degree(NodeId v) const { return static_cast<std::uint32_t>(adj_[v].size()); }

    bool has_edge(NodeId u, NodeId v) const;

    // All edges with u < v, ascending. Materialized on demand.
    std::vector<Edge> edge_list() const;

    // Induced edge set over a sorted node set.
    std::vector<Edge> induced_edges(std::span<const NodeId> sorted_nodes) const;

    // Ancestor label of node `v` at `level`, or kNoLabel past the node's depth.
    // Throws InputError for an unknown node.
    LabelId label_at_level(const LabelTaxonomy& tax, NodeId v, int level) const;

private:
    std::uint32_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<LabelId> labels_;
    std::vector<std::vector<NodeId>> adj_;
};

}  // namespace hgs
