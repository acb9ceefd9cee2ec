#pragma once

#include <span>

#include "hgs/graph.hpp"
#include "hgs/mdl.hpp"
#include "hgs/structure.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {

// Connectivity cost L_t(s) for any structure kind. `n_total` is |V| of the
// host graph. Near kinds derive their observable/non-observable counts from
// `observed` and the pattern cell count.
double connectivity_cost(const Structure& s, std::uint64_t n_total);

// Label encoding costs at a single level (the three per-level modes).
double label_base_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g,
                       int level);

// Requires all nodes of s to share the level-`level` label (and every
// shallower one); throws std::invalid_argument otherwise.
double label_consistent_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g,
                             int level);

// Requires a kind with two roles, each internally consistent at the level,
// with differing role labels. The second role's codebook excludes the first
// role's label when both share a parent.
double label_role_consistent_cost(const Structure& s, const LabelTaxonomy& tax,
                                  const HeteroGraph& g, int level);

struct LabelCost {
    double bits = 0.0;
    int h1 = 0;  // deepest level through which the structure is consistent
    int h2 = 0;  // deepest level through which it stays role-consistent
};

// Full hierarchical label cost L_a(s): weak-composition term, consistent
// levels 1..h1, role-consistent levels h1+1..h2, base levels h2+1..h, plus
// 2 log2 h for transmitting h1 and h2.
LabelCost label_full_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g);

// L(E) = L(E+) + L(E-) from a populated error state.
double connectivity_error_cost(const ErrorState& err);

// L(E^a): labels of nodes covered by no structure, base-encoded as one group.
double labeling_error_cost(std::span<const NodeId> uncovered, const LabelTaxonomy& tax,
                           const HeteroGraph& g);

// Derives E+, E-, en and the error-code domains for a model against a graph.
// Throws std::invalid_argument when two structures claim the same edge.
ErrorState compute_errors(const Model& model, const HeteroGraph& g);

// Full two-part cost L(G, M) with a per-term breakdown.
CostBreakdown model_cost(const Model& model, const HeteroGraph& g, const LabelTaxonomy& tax);

// A candidate scope: a sorted node set plus its induced edge count.
struct ScopeView {
    std::span<const NodeId> nodes;  // sorted ascending
    std::size_t edge_count = 0;
};

// Cost of covering a scope with a set of structures whose pattern areas are
// pairwise disjoint. Error codes are pooled over the scope's cell domain the
// same way the global model does; optionally charges base label bits for
// scope nodes no structure covers.
struct ScopeCost {
    double structure_bits = 0.0;   // sum of L_t + L_a
    double eplus_bits = 0.0;
    double eminus_bits = 0.0;
    double uncovered_label_bits = 0.0;
    double total() const { return structure_bits + eplus_bits + eminus_bits + uncovered_label_bits; }
};
ScopeCost scope_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope,
                     std::span<const Structure> structures, bool charge_uncovered_labels);

// Local cost of one structure against its candidate subgraph: L_t + L_a plus
// the connectivity error of the structure's pattern against the scope cells.
// Uncovered-node labels are not charged here.
double local_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope,
                  const Structure& s);

// Cost of leaving a scope unmodeled: all its edges through L(E-) plus all its
// node labels through L(E^a).
double unmodeled_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope);

}  // namespace hgs
