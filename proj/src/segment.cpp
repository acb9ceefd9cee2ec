#include "hgs/segment.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hgs {

namespace {

bool level_value_consistent(const LabelTaxonomy& tax, const HeteroGraph& g,
                            std::span<const NodeId> nodes, int level) {
    const LabelId first = tax.ancestor_at(g.label(nodes[0]), level);
    for (NodeId v : nodes) {
        if (tax.ancestor_at(g.label(v), level) != first) return false;
    }
    return true;
}

bool structure_consistent(const Structure& s, const SegmentContext& ctx, int level) {
    const LabelId first = ctx.tax.ancestor_at(ctx.g.label(s.primary[0]), level);
    for (NodeId v : s.primary) {
        if (ctx.tax.ancestor_at(ctx.g.label(v), level) != first) return false;
    }
    for (NodeId v : s.secondary) {
        if (ctx.tax.ancestor_at(ctx.g.label(v), level) != first) return false;
    }
    return true;
}

bool structure_role_consistent(const Structure& s, const SegmentContext& ctx, int level) {
    if (!s.has_roles()) return false;
    if (!level_value_consistent(ctx.tax, ctx.g, s.primary, level)) return false;
    if (!level_value_consistent(ctx.tax, ctx.g, s.secondary, level)) return false;
    return ctx.tax.ancestor_at(ctx.g.label(s.primary[0]), level) !=
           ctx.tax.ancestor_at(ctx.g.label(s.secondary[0]), level);
}

ScopeView scope_of(const std::vector<NodeId>& sorted_nodes, const HeteroGraph& g,
                   std::vector<Edge>& edge_storage) {
    edge_storage = g.induced_edges(sorted_nodes);
    return ScopeView{{sorted_nodes.data(), sorted_nodes.size()}, edge_storage.size()};
}

double compare_cost(const SegmentContext& ctx, const ScopeView& scope,
                    std::span<const Structure> structures) {
    return scope_cost(ctx.g, ctx.tax, scope, structures, true).total();
}

// Observable edges of a near part are the graph edges inside its pattern.
void fill_observed(Structure& s, const HeteroGraph& g) {
    if (!s.is_near()) return;
    s.observed.clear();
    if (s.kind == StructureKind::NearClique) {
        s.observed = g.induced_edges(s.primary);
    } else {
        for (NodeId a : s.primary) {
            for (NodeId v : g.neighbors(a)) {
                if (std::binary_search(s.secondary.begin(), s.secondary.end(), v)) {
                    s.observed.push_back(make_edge(a, v));
                }
            }
        }
        std::sort(s.observed.begin(), s.observed.end());
    }
}

}  // namespace

MajoritySplitResult majority_split(std::span<const NodeId> nodes, const LabelTaxonomy& tax,
                                   const HeteroGraph& g, int level) {
    if (nodes.empty()) throw std::invalid_argument("majority_split: empty node set");
    // Bucket by level label; the map key carries the tie-break path (absent
    // bucket keys as the empty string, sorting first).
    std::map<std::string, std::pair<LabelId, std::vector<NodeId>>> buckets;
    for (NodeId v : nodes) {
        const LabelId label = tax.ancestor_at(g.label(v), level);
        std::string key = label == kNoLabel ? std::string() : tax.path_string(label);
        auto& bucket = buckets[std::move(key)];
        bucket.first = label;
        bucket.second.push_back(v);
    }
    const std::pair<LabelId, std::vector<NodeId>>* best = nullptr;
    for (const auto& [key, bucket] : buckets) {
        if (!best || bucket.second.size() > best->second.size()) best = &bucket;
    }
    MajoritySplitResult out;
    out.majority_label = best->first;
    out.majority = best->second;
    for (NodeId v : nodes) {
        if (!std::binary_search(out.majority.begin(), out.majority.end(), v)) {
            out.rest.push_back(v);
        }
    }
    std::sort(out.majority.begin(), out.majority.end());
    std::sort(out.rest.begin(), out.rest.end());
    return out;
}

std::vector<Structure> segment_star(const Structure& s, int level, const SegmentContext& ctx) {
    if (s.kind != StructureKind::Star) throw std::invalid_argument("segment_star: not a star");
    MajoritySplitResult split = majority_split(s.secondary, ctx.tax, ctx.g, level);
    if (split.rest.empty()) return {s};
    if (split.majority.size() < 2 || split.rest.size() < 2) return {s};

    Structure first{StructureKind::Star, s.primary, std::move(split.majority), {}};
    Structure second{StructureKind::Star, s.primary, std::move(split.rest), {}};

    std::vector<Edge> scope_edges;
    const std::vector<NodeId> scope_nodes = s.sorted_nodes();
    const ScopeView scope = scope_of(scope_nodes, ctx.g, scope_edges);
    const double before = compare_cost(ctx, scope, {&s, 1});
    const Structure after_parts[2] = {first, second};
    const double after = compare_cost(ctx, scope, {after_parts, 2});
    if (after < before) return {std::move(first), std::move(second)};
    return {s};
}

std::vector<Structure> segment_bipartite(const Structure& s, int level, const SegmentContext& ctx) {
    if (s.kind != StructureKind::FullBipartite && s.kind != StructureKind::NearBipartite) {
        throw std::invalid_argument("segment_bipartite: not a bipartite core");
    }
    MajoritySplitResult split_a = majority_split(s.primary, ctx.tax, ctx.g, level);
    MajoritySplitResult split_b = majority_split(s.secondary, ctx.tax, ctx.g, level);
    const bool can_split_a = !split_a.rest.empty();
    const bool can_split_b = !split_b.rest.empty();

    auto make_part = [&](const std::vector<NodeId>& side_a,
                         const std::vector<NodeId>& side_b) -> std::optional<Structure> {
        if (side_a.empty() || side_b.empty()) return std::nullopt;
        if (side_a.size() + side_b.size() < 3) return std::nullopt;
        Structure part{s.kind, side_a, side_b, {}};
        fill_observed(part, ctx.g);
        return part;
    };

    // The four cases of the bipartite rule; a case is admissible only when
    // every part clears the minimum size.
    std::vector<std::vector<Structure>> cases;
    cases.push_back({s});
    auto add_case = [&](std::vector<std::optional<Structure>> parts) {
        std::vector<Structure> materialized;
        for (auto& p : parts) {
            if (!p) return;
            materialized.push_back(std::move(*p));
        }
        cases.push_back(std::move(materialized));
    };
    if (can_split_a) {
        add_case({make_part(split_a.majority, s.secondary), make_part(split_a.rest, s.secondary)});
    }
    if (can_split_b) {
        add_case({make_part(s.primary, split_b.majority), make_part(s.primary, split_b.rest)});
    }
    if (can_split_a && can_split_b) {
        add_case({make_part(split_a.majority, split_b.majority),
                  make_part(split_a.majority, split_b.rest),
                  make_part(split_a.rest, split_b.majority), make_part(split_a.rest, split_b.rest)});
    }
    if (cases.size() == 1) return {s};

    std::vector<Edge> scope_edges;
    const std::vector<NodeId> scope_nodes = s.sorted_nodes();
    const ScopeView scope = scope_of(scope_nodes, ctx.g, scope_edges);

    std::size_t best_case = 0;
    double best_bits = 0.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const double bits = compare_cost(ctx, scope, {cases[i].data(), cases[i].size()});
        // Strict improvement required; ties prefer fewer structures, which the
        // case ordering already encodes.
        if (i == 0 || bits < best_bits) {
            best_case = i;
            best_bits = bits;
        }
    }
    return std::move(cases[best_case]);
}

std::vector<Structure> segment_uniform(const Structure& s, int level, const SegmentContext& ctx) {
    if (s.kind == StructureKind::FullClique || s.kind == StructureKind::NearClique) {
        MajoritySplitResult split = majority_split(s.primary, ctx.tax, ctx.g, level);
        if (split.rest.empty()) return {s};
        const std::size_t min_nodes = s.kind == StructureKind::FullClique ? 2 : 3;
        if (split.majority.size() < min_nodes || split.rest.size() < min_nodes) return {s};

        Structure first{s.kind, std::move(split.majority), {}, {}};
        Structure second{s.kind, std::move(split.rest), {}, {}};
        fill_observed(first, ctx.g);
        fill_observed(second, ctx.g);

        std::vector<Edge> scope_edges;
        const ScopeView scope = scope_of(s.primary, ctx.g, scope_edges);
        const double before = compare_cost(ctx, scope, {&s, 1});
        const Structure after_parts[2] = {first, second};
        const double after = compare_cost(ctx, scope, {after_parts, 2});
        if (after < before) return {std::move(first), std::move(second)};
        return {s};
    }
    if (s.kind != StructureKind::Chain) {
        throw std::invalid_argument("segment_uniform: expects a clique or chain");
    }

    // Chains split positionally: each label side keeps its maximal runs of
    // >= 3 consecutive nodes; run-joining edges and shorter runs drop to the
    // error channel. Both sides must produce at least one run.
    MajoritySplitResult split = majority_split(s.primary, ctx.tax, ctx.g, level);
    if (split.rest.empty()) return {s};

    std::vector<Structure> runs;
    bool majority_has_run = false;
    bool rest_has_run = false;
    std::size_t i = 0;
    while (i < s.primary.size()) {
        const bool in_majority =
            std::binary_search(split.majority.begin(), split.majority.end(), s.primary[i]);
        std::size_t j = i + 1;
        while (j < s.primary.size() &&
               std::binary_search(split.majority.begin(), split.majority.end(), s.primary[j]) ==
                   in_majority) {
            ++j;
        }
        if (j - i >= 3) {
            Structure run{StructureKind::Chain, {}, {}, {}};
            run.primary.assign(s.primary.begin() + static_cast<std::ptrdiff_t>(i),
                               s.primary.begin() + static_cast<std::ptrdiff_t>(j));
            runs.push_back(std::move(run));
            (in_majority ? majority_has_run : rest_has_run) = true;
        }
        i = j;
    }
    if (!majority_has_run || !rest_has_run) return {s};

    std::vector<Edge> scope_edges;
    std::vector<NodeId> scope_nodes = s.primary;
    std::sort(scope_nodes.begin(), scope_nodes.end());
    const ScopeView scope = scope_of(scope_nodes, ctx.g, scope_edges);
    const double before = compare_cost(ctx, scope, {&s, 1});
    const double after = compare_cost(ctx, scope, {runs.data(), runs.size()});
    if (after < before) return runs;
    return {s};
}

namespace {

std::vector<Structure> segment_at_level(const Structure& s, int level, const SegmentContext& ctx) {
    switch (s.kind) {
        case StructureKind::Star:
            return segment_star(s, level, ctx);
        case StructureKind::FullBipartite:
        case StructureKind::NearBipartite:
            return segment_bipartite(s, level, ctx);
        default:
            return segment_uniform(s, level, ctx);
    }
}

void process_level(Structure s, int level, const SegmentContext& ctx,
                   std::vector<Structure>& out, SegmentTrace* trace) {
    const int h = ctx.tax.h();
    while (level <= h) {
        if (structure_consistent(s, ctx, level)) {
            if (trace) {
                trace->decisions.push_back({level, SegmentDecision::Status::Consistent,
                                            SegmentDecision::Action::Descend, 0.0, 0.0, 1});
            }
            ++level;
            continue;
        }
        if (structure_role_consistent(s, ctx, level)) {
            if (trace) {
                trace->decisions.push_back({level, SegmentDecision::Status::RoleConsistent,
                                            SegmentDecision::Action::Descend, 0.0, 0.0, 1});
            }
            ++level;
            continue;
        }

        std::vector<Structure> parts = segment_at_level(s, level, ctx);
        if (trace) {
            SegmentDecision d;
            d.level = level;
            d.status = SegmentDecision::Status::Inconsistent;
            d.action = parts.size() > 1 ? SegmentDecision::Action::Split
                                        : SegmentDecision::Action::Keep;
            d.parts = parts.size();
            std::vector<Edge> scope_edges;
            const std::vector<NodeId> scope_nodes = s.sorted_nodes();
            const ScopeView scope = scope_of(scope_nodes, ctx.g, scope_edges);
            d.before_bits = compare_cost(ctx, scope, {&s, 1});
            d.after_bits = parts.size() > 1
                               ? compare_cost(ctx, scope, {parts.data(), parts.size()})
                               : d.before_bits;
            trace->decisions.push_back(d);
        }
        if (parts.size() <= 1) {
            out.push_back(std::move(s));  // rule 3 (and rule 4 when the split lost)
            return;
        }
        if (level == h) {
            for (auto& p : parts) out.push_back(std::move(p));  // rule 4
            return;
        }
        for (auto& p : parts) {
            process_level(std::move(p), level + 1, ctx, out, trace);  // rule 2
        }
        return;
    }
    out.push_back(std::move(s));  // consistent (or role-consistent) through level h
}

}  // namespace

std::vector<Structure> hierarchical_segment(const Structure& s, const SegmentContext& ctx,
                                            SegmentTrace* trace) {
    std::vector<Structure> out;
    process_level(s, 1, ctx, out, trace);
    if (trace) {
        std::vector<Edge> scope_edges;
        const std::vector<NodeId> scope_nodes = s.sorted_nodes();
        const ScopeView scope = scope_of(scope_nodes, ctx.g, scope_edges);
        trace->cost_before = compare_cost(ctx, scope, {&s, 1});
        trace->cost_after = compare_cost(ctx, scope, {out.data(), out.size()});
        trace->final_parts = out.size();
    }
    return out;
}

}  // namespace hgs
