#pragma once

#include <span>
#include <vector>

#include "hgs/encoding.hpp"
#include "hgs/graph.hpp"
#include "hgs/structure.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {

struct SegmentContext {
    const HeteroGraph& g;
    const LabelTaxonomy& tax;
};

// Majority/rest partition of a node set by level-k label. Nodes shorter than
// the level form their own bucket. Ties between buckets break toward the
// lexicographically smaller label path (the absent bucket sorts first).
struct MajoritySplitResult {
    std::vector<NodeId> majority;
    std::vector<NodeId> rest;
    LabelId majority_label = kNoLabel;
};
MajoritySplitResult majority_split(std::span<const NodeId> nodes, const LabelTaxonomy& tax,
                                   const HeteroGraph& g, int level);

// Per-kind one-level segmentation. Each returns either {input} (no split) or
// the segmented parts, accepting a split only when the summed scope cost
// strictly decreases. Sizes below the kind's minimum block the split.
std::vector<Structure> segment_star(const Structure& s, int level, const SegmentContext& ctx);
std::vector<Structure> segment_bipartite(const Structure& s, int level, const SegmentContext& ctx);
std::vector<Structure> segment_uniform(const Structure& s, int level, const SegmentContext& ctx);

// Trace of one structure's walk down the hierarchy, for `segment-trace`.
struct SegmentDecision {
    int level = 0;
    enum class Status { Consistent, RoleConsistent, Inconsistent } status = Status::Consistent;
    enum class Action { Descend, Split, Keep } action = Action::Descend;
    double before_bits = 0.0;  // split attempts only
    double after_bits = 0.0;
    std::size_t parts = 1;
};
struct SegmentTrace {
    std::vector<SegmentDecision> decisions;
    double cost_before = 0.0;  // scope cost of the input structure
    double cost_after = 0.0;   // pooled scope cost of the final output
    std::size_t final_parts = 1;
};

// Walks levels 1..h applying the four segmentation rules: descend while
// consistent or role-consistent, split-and-recurse when a split pays off,
// finalize otherwise. Output areas partition the input area minus any edges
// dropped to the error channel.
std::vector<Structure> hierarchical_segment(const Structure& s, const SegmentContext& ctx,
                                            SegmentTrace* trace = nullptr);

}  // namespace hgs
