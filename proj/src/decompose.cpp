#include "hgs/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace hgs {

DecomposeConfig DecomposeConfig::defaults_for(std::uint32_t n) {
    DecomposeConfig cfg;
    cfg.hubs_per_iter = std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::ceil(0.005 * static_cast<double>(n))));
    cfg.gcc_stop_threshold = cfg.hubs_per_iter;
    cfg.max_iters = 0;
    cfg.min_subgraph_nodes = 3;
    return cfg;
}

namespace {

// Working view: alive node set with per-node degree maintained incrementally.
struct WorkingGraph {
    const HeteroGraph& g;
    std::vector<bool> alive;
    std::vector<std::uint32_t> degree;

    explicit WorkingGraph(const HeteroGraph& graph) : g(graph), alive(graph.n(), true), degree(graph.n()) {
        for (NodeId v = 0; v < graph.n(); ++v) degree[v] = graph.degree(v);
    }

    void remove(NodeId v) {
        alive[v] = false;
        degree[v] = 0;
        for (NodeId u : g.neighbors(v)) {
            if (alive[u] && degree[u] > 0) --degree[u];
        }
    }
};

// Connected components among `members` (all alive), smallest-id first inside
// each component, components ordered by discovery from the smallest id.
std::vector<std::vector<NodeId>> components_of(const WorkingGraph& w,
                                               const std::vector<NodeId>& members) {
    std::vector<std::vector<NodeId>> comps;
    std::unordered_map<NodeId, bool> seen;
    seen.reserve(members.size() * 2);
    for (NodeId v : members) seen.emplace(v, false);
    std::vector<NodeId> stack;
    for (NodeId start : members) {
        auto it = seen.find(start);
        if (it->second) continue;
        it->second = true;
        std::vector<NodeId> comp;
        stack.push_back(start);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId u : w.g.neighbors(v)) {
                auto uit = seen.find(u);
                if (uit != seen.end() && !uit->second && w.alive[u]) {
                    uit->second = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

CandidateSubgraph make_candidate(const HeteroGraph& g, std::vector<NodeId> nodes,
                                 CandidateSubgraph::Origin origin) {
    CandidateSubgraph c;
    c.nodes = std::move(nodes);
    c.edges = g.induced_edges(c.nodes);
    c.origin = origin;
    return c;
}

}  // namespace

std::vector<CandidateSubgraph> slashburn_decompose(const HeteroGraph& g,
                                                   const DecomposeConfig& cfg,
                                                   std::uint64_t /*seed*/) {
    if (g.n() == 0) throw std::invalid_argument("slashburn_decompose: empty graph");
    DecomposeConfig c = cfg;
    if (c.hubs_per_iter == 0) c.hubs_per_iter = DecomposeConfig::defaults_for(g.n()).hubs_per_iter;
    if (c.gcc_stop_threshold == 0) c.gcc_stop_threshold = c.hubs_per_iter;

    std::vector<CandidateSubgraph> out;
    auto emit = [&](std::vector<NodeId> nodes, CandidateSubgraph::Origin origin) {
        if (nodes.size() < c.min_subgraph_nodes) return;
        out.push_back(make_candidate(g, std::move(nodes), origin));
    };

    WorkingGraph work(g);
    std::vector<NodeId> current(g.n());
    std::iota(current.begin(), current.end(), 0);

    std::uint32_t iters = 0;
    while (true) {
        auto comps = components_of(work, current);
        // Giant component: largest, ties toward the one holding the smallest id.
        std::size_t gcc = 0;
        for (std::size_t i = 1; i < comps.size(); ++i) {
            if (comps[i].size() > comps[gcc].size()) gcc = i;
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i != gcc) emit(std::move(comps[i]), CandidateSubgraph::Origin::SatelliteComponent);
        }
        current = std::move(comps[gcc]);

        const bool out_of_iters = c.max_iters != 0 && iters >= c.max_iters;
        if (current.size() <= c.gcc_stop_threshold || out_of_iters) {
            emit(std::move(current), CandidateSubgraph::Origin::SatelliteComponent);
            break;
        }

        // Top-k hubs by degree at iteration start, ties toward smaller id.
        std::vector<NodeId> by_degree = current;
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](NodeId a, NodeId b) {
            return work.degree[a] != work.degree[b] ? work.degree[a] > work.degree[b] : a < b;
        });
        const std::size_t k = std::min<std::size_t>(c.hubs_per_iter, by_degree.size());

        // Slash one hub at a time; the egonet uses the hub's neighborhood at
        // its removal time (later hubs lose earlier ones as neighbors).
        std::vector<NodeId> survivors;
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId hub = by_degree[i];
            std::vector<NodeId> ego;
            ego.push_back(hub);
            for (NodeId u : g.neighbors(hub)) {
                if (work.alive[u]) ego.push_back(u);
            }
            std::sort(ego.begin(), ego.end());
            emit(std::move(ego), CandidateSubgraph::Origin::HubEgonet);
            work.remove(hub);
        }
        survivors.reserve(current.size() - k);
        for (NodeId v : current) {
            if (work.alive[v]) survivors.push_back(v);
        }
        current = std::move(survivors);
        if (current.empty()) break;
        ++iters;
    }
    return out;
}

std::pair<std::vector<NodeId>, std::vector<NodeId>> fabp_bipartite_split(
    const CandidateSubgraph& sub) {
    if (sub.nodes.empty()) throw std::invalid_argument("fabp_bipartite_split: empty subgraph");
    const std::size_t n = sub.nodes.size();

    std::unordered_map<NodeId, std::uint32_t> index;
    index.reserve(n * 2);
    for (std::uint32_t i = 0; i < n; ++i) index.emplace(sub.nodes[i], i);
    std::vector<std::vector<std::uint32_t>> adj(n);
    std::vector<std::uint32_t> degree(n, 0);
    for (const Edge& e : sub.edges) {
        const std::uint32_t a = index.at(e.first);
        const std::uint32_t b = index.at(e.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++degree[a];
        ++degree[b];
    }

    // Seed: highest degree (smallest id on ties) positive, its neighbors negative.
    std::uint32_t seed_idx = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
        if (degree[i] > degree[seed_idx]) seed_idx = i;
    }
    std::vector<double> prior(n, 0.0);
    prior[seed_idx] = 1.0;
    for (std::uint32_t u : adj[seed_idx]) prior[u] = -1.0;

    constexpr double kCoupling = -0.1;
    constexpr double kDamping = 0.5;
    constexpr double kTolerance = 1e-4;
    constexpr int kMaxIters = 20;

    std::vector<double> belief = prior;
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < kMaxIters; ++iter) {
        double max_change = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            double neighbor_sum = 0.0;
            for (std::uint32_t u : adj[i]) neighbor_sum += belief[u];
            const double updated = prior[i] + kCoupling * neighbor_sum;
            next[i] = kDamping * belief[i] + (1.0 - kDamping) * updated;
            max_change = std::max(max_change, std::abs(next[i] - belief[i]));
        }
        belief.swap(next);
        if (max_change < kTolerance) break;
    }

    std::pair<std::vector<NodeId>, std::vector<NodeId>> sides;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (belief[i] > 0.0 || (belief[i] == 0.0 && i == seed_idx)) {
            sides.first.push_back(sub.nodes[i]);
        } else {
            sides.second.push_back(sub.nodes[i]);
        }
    }
    // The seed always represents set A even if damping pushed it to zero.
    if (sides.first.empty()) {
        sides.first.push_back(sub.nodes[seed_idx]);
        sides.second.erase(
            std::find(sides.second.begin(), sides.second.end(), sub.nodes[seed_idx]));
    }
    return sides;
}

}  // namespace hgs
