#include "hgs/identify.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "hgs/util.hpp"

namespace hgs {

namespace {

// Local adjacency over a candidate's nodes, used by the chain heuristic.
struct LocalView {
    std::vector<NodeId> nodes;                      // sorted
    std::vector<std::vector<std::uint32_t>> adj;    // local indices, sorted
    std::vector<std::uint32_t> degree;

    explicit LocalView(const CandidateSubgraph& sub) : nodes(sub.nodes) {
        adj.resize(nodes.size());
        degree.assign(nodes.size(), 0);
        for (const Edge& e : sub.edges) {
            const std::uint32_t a = local(e.first);
            const std::uint32_t b = local(e.second);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& v : adj) std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < adj.size(); ++i) degree[i] = static_cast<std::uint32_t>(adj[i].size());
    }

    std::uint32_t local(NodeId v) const {
        return static_cast<std::uint32_t>(
            std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
    }
};

constexpr std::uint32_t kUnreached = 0xffffffffu;

// BFS distances restricted to `allowed` (empty = all). Parents prefer the
// smallest-id predecessor so shortest paths are deterministic.
void bfs(const LocalView& lv, std::uint32_t start, const std::vector<bool>* allowed,
         std::vector<std::uint32_t>& dist, std::vector<std::uint32_t>& parent) {
    dist.assign(lv.nodes.size(), kUnreached);
    parent.assign(lv.nodes.size(), kUnreached);
    std::queue<std::uint32_t> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t u : lv.adj[v]) {
            if (allowed && !(*allowed)[u]) continue;
            if (dist[u] == kUnreached) {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                q.push(u);
            }
        }
    }
}

// Farthest reached node; ties toward the smaller original id (== smaller
// local index, since nodes are sorted).
std::uint32_t farthest(const std::vector<std::uint32_t>& dist) {
    std::uint32_t best = 0;
    bool found = false;
    std::uint32_t best_d = 0;
    for (std::uint32_t i = 0; i < dist.size(); ++i) {
        if (dist[i] == kUnreached) continue;
        if (!found || dist[i] > best_d) {
            best = i;
            best_d = dist[i];
            found = true;
        }
    }
    return best;
}

std::vector<std::uint32_t> path_from_parents(const std::vector<std::uint32_t>& parent,
                                             std::uint32_t target) {
    std::vector<std::uint32_t> path;
    for (std::uint32_t v = target; v != kUnreached; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

bool kind_admissible(StructureKind kind, std::size_t node_count) {
    return kind == StructureKind::FullClique ? node_count >= 2 : node_count >= 3;
}

std::optional<Structure> encode_as_star(const CandidateSubgraph& sub, const HeteroGraph& /*g*/) {
    if (sub.nodes.size() < 3) return std::nullopt;
    // Hub: max degree inside the candidate, ties toward the smaller id.
    std::unordered_map<NodeId, std::uint32_t> degree;
    degree.reserve(sub.nodes.size() * 2);
    for (NodeId v : sub.nodes) degree.emplace(v, 0);
    for (const Edge& e : sub.edges) {
        ++degree[e.first];
        ++degree[e.second];
    }
    NodeId hub = sub.nodes[0];
    for (NodeId v : sub.nodes) {
        if (degree[v] > degree[hub]) hub = v;
    }
    Structure s;
    s.kind = StructureKind::Star;
    s.primary = {hub};
    for (NodeId v : sub.nodes) {
        if (v != hub) s.secondary.push_back(v);
    }
    return s;
}

std::pair<std::optional<Structure>, std::optional<Structure>> encode_as_clique(
    const CandidateSubgraph& sub) {
    std::pair<std::optional<Structure>, std::optional<Structure>> out;
    if (sub.nodes.size() >= 2) {
        Structure fc;
        fc.kind = StructureKind::FullClique;
        fc.primary = sub.nodes;
        out.first = std::move(fc);
    }
    if (sub.nodes.size() >= 3) {
        Structure nc;
        nc.kind = StructureKind::NearClique;
        nc.primary = sub.nodes;
        nc.observed = sub.edges;
        out.second = std::move(nc);
    }
    return out;
}

std::pair<std::optional<Structure>, std::optional<Structure>> encode_as_bipartite(
    const CandidateSubgraph& sub) {
    std::pair<std::optional<Structure>, std::optional<Structure>> out;
    if (sub.nodes.size() < 3) return out;
    auto [side_a, side_b] = fabp_bipartite_split(sub);
    if (side_a.empty() || side_b.empty()) return out;
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());

    Structure bc;
    bc.kind = StructureKind::FullBipartite;
    bc.primary = side_a;
    bc.secondary = side_b;

    Structure nb;
    nb.kind = StructureKind::NearBipartite;
    nb.primary = std::move(side_a);
    nb.secondary = std::move(side_b);
    for (const Edge& e : sub.edges) {
        const bool a_first = std::binary_search(nb.primary.begin(), nb.primary.end(), e.first);
        const bool a_second = std::binary_search(nb.primary.begin(), nb.primary.end(), e.second);
        if (a_first != a_second) nb.observed.push_back(e);
    }
    std::sort(nb.observed.begin(), nb.observed.end());
    out.first = std::move(bc);
    out.second = std::move(nb);
    return out;
}

std::optional<Structure> encode_as_chain(const CandidateSubgraph& sub, std::uint64_t start_seed) {
    if (sub.nodes.size() < 3) return std::nullopt;
    LocalView lv(sub);

    Rng rng(start_seed);
    const std::uint32_t pick = static_cast<std::uint32_t>(rng.below(lv.nodes.size()));

    std::vector<std::uint32_t> dist, parent;
    bfs(lv, pick, nullptr, dist, parent);
    for (std::uint32_t d : dist) {
        if (d == kUnreached) return std::nullopt;  // disconnected candidates have no chain
    }
    const std::uint32_t start = farthest(dist);

    bfs(lv, start, nullptr, dist, parent);
    const std::uint32_t finish = farthest(dist);
    std::vector<std::uint32_t> chain = path_from_parents(parent, finish);

    // Extend at each end through the subgraph that excludes the chain's interior.
    auto extend = [&](std::uint32_t endpoint, bool append) {
        std::vector<bool> allowed(lv.nodes.size(), true);
        for (std::uint32_t v : chain) allowed[v] = false;
        allowed[endpoint] = true;
        bfs(lv, endpoint, &allowed, dist, parent);
        const std::uint32_t tip = farthest(dist);
        if (tip == endpoint) return;
        std::vector<std::uint32_t> tail = path_from_parents(parent, tip);
        if (append) {
            chain.insert(chain.end(), tail.begin() + 1, tail.end());
        } else {
            std::reverse(tail.begin(), tail.end());
            chain.insert(chain.begin(), tail.begin(), tail.end() - 1);
        }
    };
    extend(chain.back(), true);
    extend(chain.front(), false);

    if (chain.size() < 3) return std::nullopt;
    Structure s;
    s.kind = StructureKind::Chain;
    s.primary.reserve(chain.size());
    for (std::uint32_t v : chain) s.primary.push_back(lv.nodes[v]);
    return s;
}

std::optional<IdentifiedStructure> best_structure(const CandidateSubgraph& sub,
                                                  const HeteroGraph& g, const LabelTaxonomy& tax,
                                                  std::uint64_t seed,
                                                  std::uint32_t candidate_index) {
    const ScopeView scope{{sub.nodes.data(), sub.nodes.size()}, sub.edges.size()};

    std::optional<IdentifiedStructure> best;
    auto consider = [&](std::optional<Structure>&& s) {
        if (!s) return;
        const double bits = local_cost(g, tax, scope, *s);
        if (!best || bits < best->local_bits) {
            best = IdentifiedStructure{std::move(*s), bits};
        }
    };

    // Fixed evaluation order doubles as the tie-break order.
    consider(encode_as_star(sub, g));
    auto cliques = encode_as_clique(sub);
    consider(std::move(cliques.first));
    consider(std::move(cliques.second));
    auto cores = encode_as_bipartite(sub);
    consider(std::move(cores.first));
    consider(std::move(cores.second));
    consider(encode_as_chain(sub, seed ^ (0x9e3779b97f4a7c15ULL * (candidate_index + 1))));
    return best;
}

std::vector<std::optional<IdentifiedStructure>> identify_candidates(
    const std::vector<CandidateSubgraph>& candidates, const HeteroGraph& g,
    const LabelTaxonomy& tax, std::uint64_t seed, unsigned threads) {
    std::vector<std::optional<IdentifiedStructure>> out(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        out[i] = best_structure(candidates[i], g, tax, seed, static_cast<std::uint32_t>(i));
    });
    return out;
}

}  // namespace hgs
