#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgs/graph.hpp"

namespace hgs {

struct DecomposeConfig {
    std::uint32_t hubs_per_iter = 0;       // k; 0 = derive from n
    std::uint32_t gcc_stop_threshold = 0;  // 0 = same as k
    std::uint32_t max_iters = 0;           // T; 0 = until threshold
    std::uint32_t min_subgraph_nodes = 3;

    // SlashBurn practice: k = max(1, ceil(0.005 n)), stop when the GCC is
    // no bigger than k.
    static DecomposeConfig defaults_for(std::uint32_t n);
};

struct CandidateSubgraph {
    enum class Origin : std::uint8_t { HubEgonet, SatelliteComponent };

    std::vector<NodeId> nodes;  // sorted ascending
    std::vector<Edge> edges;    // induced edges, sorted
    Origin origin = Origin::SatelliteComponent;
};

// SlashBurn decomposition: repeatedly slash the k highest-degree nodes out of
// the current giant connected component and collect hub egonets plus the
// satellite components that burn off. Deterministic: degree ties break toward
// the smaller node id. Candidate edge areas may overlap; assembly resolves.
std::vector<CandidateSubgraph> slashburn_decompose(const HeteroGraph& g,
                                                   const DecomposeConfig& cfg,
                                                   std::uint64_t seed);

// Heterophilic belief propagation splitting a candidate into two role sets.
// The highest-degree node seeds set A, its neighbors seed set B; beliefs are
// damped (0.5) with coupling -0.1 and iterated to convergence (<1e-4) or 20
// rounds. Every node lands in exactly one set.
std::pair<std::vector<NodeId>, std::vector<NodeId>> fabp_bipartite_split(
    const CandidateSubgraph& sub);

}  // namespace hgs
