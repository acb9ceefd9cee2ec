#include "hgs/assemble.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hgs {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Vanilla: return "vanilla";
        case Strategy::TopK: return "topk";
        case Strategy::Benefit: return "benefit";
    }
    return "?";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "vanilla") return Strategy::Vanilla;
    if (name == "topk") return Strategy::TopK;
    if (name == "benefit") return Strategy::Benefit;
    throw InputError("unknown strategy '" + name + "'");
}

double compute_gain(const HeteroGraph& g, const LabelTaxonomy& tax, const Structure& s) {
    const std::vector<NodeId> nodes = s.sorted_nodes();
    const std::vector<Edge> edges = g.induced_edges(nodes);
    const ScopeView scope{{nodes.data(), nodes.size()}, edges.size()};
    return unmodeled_cost(g, tax, scope) - local_cost(g, tax, scope, s);
}

namespace {

std::vector<Edge> area_edges(const Structure& s, const HeteroGraph& g) {
    if (s.is_near()) return s.observed;
    std::vector<Edge> area;
    switch (s.kind) {
        case StructureKind::Star: {
            const NodeId hub = s.primary[0];
            for (NodeId v : s.secondary) {
                if (g.has_edge(hub, v)) area.push_back(make_edge(hub, v));
            }
            break;
        }
        case StructureKind::FullClique:
            area = g.induced_edges(s.primary);
            break;
        case StructureKind::FullBipartite:
            for (NodeId a : s.primary) {
                for (NodeId v : g.neighbors(a)) {
                    if (std::binary_search(s.secondary.begin(), s.secondary.end(), v)) {
                        area.push_back(make_edge(a, v));
                    }
                }
            }
            break;
        case StructureKind::Chain:
            for (std::size_t i = 0; i + 1 < s.primary.size(); ++i) {
                area.push_back(make_edge(s.primary[i], s.primary[i + 1]));
            }
            break;
        default:
            break;
    }
    return area;
}

// First-wins trimming: adjust the structure so its area avoids already
// claimed edges, or drop it when that breaks the kind's minimum size.
// Near kinds re-record conflicting cells as non-observable, which keeps their
// exact encoding intact.
bool trim_against_claims(Structure& s, const HeteroGraph& g,
                         const std::unordered_set<std::uint64_t>& claimed) {
    auto is_claimed = [&](const Edge& e) { return claimed.contains(cell_key(e.first, e.second)); };

    switch (s.kind) {
        case StructureKind::NearClique:
        case StructureKind::NearBipartite: {
            std::erase_if(s.observed, is_claimed);
            return true;
        }
        case StructureKind::Star: {
            const NodeId hub = s.primary[0];
            std::erase_if(s.secondary, [&](NodeId v) {
                return g.has_edge(hub, v) && is_claimed(make_edge(hub, v));
            });
            return s.secondary.size() >= 2;
        }
        case StructureKind::FullClique:
        case StructureKind::FullBipartite: {
            // Drop the node with the most conflicting edges until clean.
            while (true) {
                std::unordered_map<NodeId, std::uint32_t> conflicts;
                for (const Edge& e : area_edges(s, g)) {
                    if (is_claimed(e)) {
                        ++conflicts[e.first];
                        ++conflicts[e.second];
                    }
                }
                if (conflicts.empty()) break;
                NodeId worst = conflicts.begin()->first;
                std::uint32_t worst_count = conflicts.begin()->second;
                for (const auto& [v, c] : conflicts) {
                    if (c > worst_count || (c == worst_count && v < worst)) {
                        worst = v;
                        worst_count = c;
                    }
                }
                auto drop = [&](std::vector<NodeId>& side) {
                    auto it = std::lower_bound(side.begin(), side.end(), worst);
                    if (it != side.end() && *it == worst) side.erase(it);
                };
                drop(s.primary);
                drop(s.secondary);
                if (s.kind == StructureKind::FullClique) {
                    if (s.primary.size() < 2) return false;
                } else {
                    if (s.primary.empty() || s.secondary.empty() || s.size() < 3) return false;
                }
            }
            return true;
        }
        case StructureKind::Chain: {
            // Cut at claimed links and keep the longest surviving run.
            std::size_t best_lo = 0, best_len = 0;
            std::size_t lo = 0;
            for (std::size_t i = 0; i + 1 <= s.primary.size(); ++i) {
                const bool cut = i + 1 == s.primary.size() ||
                                 is_claimed(make_edge(s.primary[i], s.primary[i + 1]));
                if (cut) {
                    const std::size_t len = i + 1 - lo;
                    if (len > best_len) {
                        best_len = len;
                        best_lo = lo;
                    }
                    lo = i + 1;
                }
            }
            if (best_len < 3) return false;
            if (best_len != s.primary.size()) {
                std::vector<NodeId> kept(
                    s.primary.begin() + static_cast<std::ptrdiff_t>(best_lo),
                    s.primary.begin() + static_cast<std::ptrdiff_t>(best_lo + best_len));
                s.primary = std::move(kept);
            }
            return true;
        }
    }
    return false;
}

}  // namespace

AssembleResult assemble(const std::vector<CandidateEntry>& candidates, Strategy strategy,
                        std::uint32_t top_k, const HeteroGraph& g, const LabelTaxonomy& tax) {
    if (strategy == Strategy::TopK && top_k < 1) {
        throw InputError("topk strategy requires k >= 1");
    }

    std::vector<std::uint32_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    if (strategy != Strategy::Vanilla) {
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (candidates[a].gain != candidates[b].gain) {
                return candidates[a].gain > candidates[b].gain;
            }
            return candidates[a].candidate_index < candidates[b].candidate_index;
        });
    }

    AssembleResult out;
    std::unordered_set<std::uint64_t> claimed;
    for (std::uint32_t idx : order) {
        if (strategy == Strategy::TopK && out.model.structures.size() >= top_k) break;
        if (strategy == Strategy::Benefit && candidates[idx].gain <= 0.0) break;

        Structure s = candidates[idx].structure;
        if (!trim_against_claims(s, g, claimed)) {
            ++out.structures_dropped;
            continue;
        }
        for (const Edge& e : area_edges(s, g)) {
            claimed.insert(cell_key(e.first, e.second));
        }
        out.model.structures.push_back(std::move(s));
    }

    out.errors = compute_errors(out.model, g);
    out.cost = model_cost(out.model, g, tax);
    return out;
}

std::vector<Edge> reconstruct(const Model& model, std::span<const Edge> e_plus,
                              std::span<const Edge> e_minus, std::uint32_t /*n*/) {
    std::vector<std::uint64_t> cells;
    for (const Structure& s : model.structures) {
        if (s.is_near()) {
            for (const Edge& e : s.observed) cells.push_back(cell_key(e.first, e.second));
        } else {
            s.for_each_pattern_cell([&](Edge e) { cells.push_back(cell_key(e.first, e.second)); });
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    // XOR with both error channels.
    std::unordered_set<std::uint64_t> flips;
    flips.reserve((e_plus.size() + e_minus.size()) * 2);
    for (const Edge& e : e_plus) flips.insert(cell_key(e.first, e.second));
    for (const Edge& e : e_minus) flips.insert(cell_key(e.first, e.second));

    std::vector<Edge> edges;
    edges.reserve(cells.size() + e_minus.size());
    for (std::uint64_t key : cells) {
        auto it = flips.find(key);
        if (it != flips.end()) {
            flips.erase(it);
        } else {
            edges.push_back(cell_to_edge(key));
        }
    }
    for (std::uint64_t key : flips) edges.push_back(cell_to_edge(key));
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace hgs
