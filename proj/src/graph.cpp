#include "hgs/graph.hpp"

#include <algorithm>

namespace hgs {

HeteroGraph HeteroGraph::build(std::uint32_t n, std::vector<LabelId> labels,
                               const std::vector<Edge>& edges, BuildStats* stats) {
    if (labels.size() != n) throw InputError("graph: label count does not match node count");
    HeteroGraph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.adj_.resize(n);

    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    std::size_t dropped = 0;
    for (const Edge& e : edges) {
        if (e.first >= n || e.second >= n) throw InputError("graph: edge endpoint out of range");
        if (e.first == e.second) {
            ++dropped;
            continue;
        }
        normalized.push_back(make_edge(e.first, e.second));
    }
    std::sort(normalized.begin(), normalized.end());
    std::size_t unique_count = 0;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        if (i > 0 && normalized[i] == normalized[i - 1]) {
            ++dropped;
            continue;
        }
        normalized[unique_count++] = normalized[i];
    }
    normalized.resize(unique_count);

    for (const Edge& e : normalized) {
        g.adj_[e.first].push_back(e.second);
        g.adj_[e.second].push_back(e.first);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = normalized.size();
    if (stats) stats->duplicate_edges_dropped = dropped;
    return g;
}

bool HeteroGraph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const NodeId target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> HeteroGraph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge> HeteroGraph::induced_edges(std::span<const NodeId> sorted_nodes) const {
    std::vector<Edge> out;
    for (NodeId u : sorted_nodes) {
        for (NodeId v : adj_[u]) {
            if (u < v && std::binary_search(sorted_nodes.begin(), sorted_nodes.end(), v)) {
                out.emplace_back(u, v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelId HeteroGraph::label_at_level(const LabelTaxonomy& tax, NodeId v, int level) const {
    if (v >= n_) throw InputError("graph: unknown node id");
    return tax.ancestor_at(labels_[v], level);
}

}  // namespace hgs
