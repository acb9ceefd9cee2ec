#include "hgs/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace hgs {

using mdl::log2_binomial;
using mdl::nonzero_count_bits;
using mdl::prefix_code_cost;
using mdl::universal_int_code_len;
using mdl::weak_composition_code_len;

double connectivity_cost(const Structure& s, std::uint64_t n_total) {
    s.validate();
    if (n_total < s.size()) throw std::invalid_argument("connectivity_cost: n_total < |s|");
    const double log2_n = std::log2(static_cast<double>(n_total));
    switch (s.kind) {
        case StructureKind::Star: {
            // spoke count, hub id, spoke ids among the remaining nodes
            const std::uint64_t spokes = s.secondary.size();
            return universal_int_code_len(spokes) + log2_n + log2_binomial(n_total - 1, spokes);
        }
        case StructureKind::FullClique: {
            const std::uint64_t k = s.primary.size();
            return universal_int_code_len(k) + log2_binomial(n_total, k);
        }
        case StructureKind::NearClique: {
            const std::uint64_t k = s.primary.size();
            const std::uint64_t ones = s.observed.size();
            const std::uint64_t zeros = s.pattern_cell_count() - ones;
            return universal_int_code_len(k) + log2_binomial(n_total, k) +
                   nonzero_count_bits(ones) + prefix_code_cost(ones, zeros);
        }
        case StructureKind::FullBipartite: {
            const std::uint64_t a = s.primary.size();
            const std::uint64_t b = s.secondary.size();
            return universal_int_code_len(a) + universal_int_code_len(b) +
                   log2_binomial(n_total, a) + log2_binomial(n_total, b);
        }
        case StructureKind::NearBipartite: {
            const std::uint64_t a = s.primary.size();
            const std::uint64_t b = s.secondary.size();
            const std::uint64_t ones = s.observed.size();
            const std::uint64_t zeros = s.pattern_cell_count() - ones;
            return universal_int_code_len(a) + universal_int_code_len(b) +
                   log2_binomial(n_total, a) + log2_binomial(n_total, b) +
                   nonzero_count_bits(ones) + prefix_code_cost(ones, zeros);
        }
        case StructureKind::Chain: {
            const std::uint64_t len = s.primary.size();
            double bits = universal_int_code_len(len - 1);
            for (std::uint64_t i = 1; i <= len; ++i) {
                bits += std::log2(static_cast<double>(n_total - i + 1));
            }
            return bits;
        }
    }
    throw std::logic_error("connectivity_cost: unreachable");
}

namespace {

// Level-k label of a node; kNoLabel when the node's path is shorter than k.
LabelId level_label(const LabelTaxonomy& tax, const HeteroGraph& g, NodeId v, int level) {
    return tax.ancestor_at(g.label(v), level);
}

bool all_share_level(const LabelTaxonomy& tax, const HeteroGraph& g,
                     std::span<const NodeId> nodes, int level, LabelId* shared) {
    LabelId first = level_label(tax, g, nodes[0], level);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (level_label(tax, g, nodes[i], level) != first) return false;
    }
    if (shared) *shared = first;
    return true;
}

double label_bits_of(const LabelTaxonomy& tax, LabelId label) {
    return label == kNoLabel
               ? 0.0
               : std::log2(static_cast<double>(tax.entry(label).sibling_count));
}

bool whole_consistent_at(const LabelTaxonomy& tax, const HeteroGraph& g, const Structure& s,
                         int level, LabelId* shared) {
    LabelId first = level_label(tax, g, s.primary[0], level);
    for (NodeId v : s.primary) {
        if (level_label(tax, g, v, level) != first) return false;
    }
    for (NodeId v : s.secondary) {
        if (level_label(tax, g, v, level) != first) return false;
    }
    if (shared) *shared = first;
    return true;
}

// Role-consistent: both roles internally consistent and their labels differ.
bool role_consistent_at(const LabelTaxonomy& tax, const HeteroGraph& g, const Structure& s,
                        int level, LabelId* label_a, LabelId* label_b) {
    LabelId la, lb;
    if (!all_share_level(tax, g, s.primary, level, &la)) return false;
    if (!all_share_level(tax, g, s.secondary, level, &lb)) return false;
    if (la == lb) return false;
    if (label_a) *label_a = la;
    if (label_b) *label_b = lb;
    return true;
}

// Second role's codebook loses one symbol when both roles draw from the same
// sibling set; with different (or absent) parents nothing can be excluded.
double role_pair_bits(const LabelTaxonomy& tax, LabelId la, LabelId lb, int level) {
    double bits = label_bits_of(tax, la);
    if (lb == kNoLabel) return bits;
    bool same_parent = false;
    if (la != kNoLabel) {
        if (level == 1) {
            same_parent = true;  // both are roots of the shared forest
        } else {
            same_parent = tax.entry(la).parent == tax.entry(lb).parent;
        }
    }
    if (same_parent) {
        const std::uint32_t siblings = tax.entry(lb).sibling_count;
        if (siblings < 2) {
            throw std::invalid_argument(
                "label_role_consistent_cost: differing labels under a single-child parent");
        }
        bits += std::log2(static_cast<double>(siblings - 1));
    } else {
        bits += label_bits_of(tax, lb);
    }
    return bits;
}

}  // namespace

double label_base_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g,
                       int level) {
    double bits = 0.0;
    for (NodeId v : s.primary) bits += tax.sibling_bits_at(g.label(v), level);
    for (NodeId v : s.secondary) bits += tax.sibling_bits_at(g.label(v), level);
    return bits;
}

double label_consistent_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g,
                             int level) {
    LabelId shared = kNoLabel;
    for (int k = 1; k <= level; ++k) {
        if (!whole_consistent_at(tax, g, s, k, &shared)) {
            throw std::invalid_argument("label_consistent_cost: structure not consistent at level " +
                                        std::to_string(k));
        }
    }
    return label_bits_of(tax, shared);
}

double label_role_consistent_cost(const Structure& s, const LabelTaxonomy& tax,
                                  const HeteroGraph& g, int level) {
    if (!s.has_roles()) {
        throw std::invalid_argument("label_role_consistent_cost: kind has no roles");
    }
    LabelId la, lb;
    if (!role_consistent_at(tax, g, s, level, &la, &lb)) {
        throw std::invalid_argument("label_role_consistent_cost: structure not role-consistent");
    }
    return role_pair_bits(tax, la, lb, level);
}

LabelCost label_full_cost(const Structure& s, const LabelTaxonomy& tax, const HeteroGraph& g) {
    const int h = tax.h();
    LabelCost out;
    out.bits = weak_composition_code_len(s.size(), tax.root_count());

    int level = 1;
    for (; level <= h; ++level) {
        LabelId shared;
        if (!whole_consistent_at(tax, g, s, level, &shared)) break;
        out.bits += label_bits_of(tax, shared);
    }
    out.h1 = level - 1;

    if (s.has_roles()) {
        for (; level <= h; ++level) {
            LabelId la, lb;
            if (!role_consistent_at(tax, g, s, level, &la, &lb)) break;
            out.bits += role_pair_bits(tax, la, lb, level);
        }
    }
    out.h2 = level - 1;

    for (; level <= h; ++level) {
        out.bits += label_base_cost(s, tax, g, level);
    }
    out.bits += 2.0 * std::log2(static_cast<double>(h));
    return out;
}

double connectivity_error_cost(const ErrorState& err) {
    const std::uint64_t plus_ones = err.e_plus.size();
    const std::uint64_t plus_zeros =
        err.plus_domain_cells > plus_ones ? err.plus_domain_cells - plus_ones : 0;
    const std::uint64_t minus_ones = err.e_minus.size();
    const std::uint64_t minus_zeros =
        err.minus_domain_cells > minus_ones ? err.minus_domain_cells - minus_ones : 0;
    return nonzero_count_bits(plus_ones) + prefix_code_cost(plus_ones, plus_zeros) +
           nonzero_count_bits(minus_ones) + prefix_code_cost(minus_ones, minus_zeros);
}

double labeling_error_cost(std::span<const NodeId> uncovered, const LabelTaxonomy& tax,
                           const HeteroGraph& g) {
    if (uncovered.empty()) return 0.0;
    double bits = weak_composition_code_len(uncovered.size(), tax.root_count());
    const int h = tax.h();
    for (NodeId v : uncovered) {
        for (int k = 1; k <= h; ++k) bits += tax.sibling_bits_at(g.label(v), k);
    }
    return bits;
}

namespace {

// Pattern bookkeeping for one structure against the host graph.
struct PatternCounts {
    std::uint64_t cells = 0;          // pattern area size
    std::uint64_t covered_edges = 0;  // graph edges inside the pattern
    std::uint64_t eplus_ones = 0;     // full-kind pattern cells absent in G
    bool exact = false;               // near kinds: area excluded from error domains
};

PatternCounts count_pattern(const HeteroGraph& g, const Structure& s) {
    PatternCounts out;
    out.cells = s.pattern_cell_count();
    out.exact = s.is_near();
    switch (s.kind) {
        case StructureKind::Star: {
            const NodeId hub = s.primary[0];
            for (NodeId v : s.secondary) {
                if (g.has_edge(hub, v)) ++out.covered_edges;
            }
            out.eplus_ones = out.cells - out.covered_edges;
            break;
        }
        case StructureKind::FullClique:
        case StructureKind::NearClique: {
            out.covered_edges = g.induced_edges(s.primary).size();
            if (!out.exact) out.eplus_ones = out.cells - out.covered_edges;
            break;
        }
        case StructureKind::FullBipartite:
        case StructureKind::NearBipartite: {
            std::uint64_t cross = 0;
            for (NodeId a : s.primary) {
                for (NodeId v : g.neighbors(a)) {
                    if (std::binary_search(s.secondary.begin(), s.secondary.end(), v)) ++cross;
                }
            }
            out.covered_edges = cross;
            if (!out.exact) out.eplus_ones = out.cells - out.covered_edges;
            break;
        }
        case StructureKind::Chain: {
            for (std::size_t i = 0; i + 1 < s.primary.size(); ++i) {
                if (g.has_edge(s.primary[i], s.primary[i + 1])) ++out.covered_edges;
            }
            out.eplus_ones = out.cells - out.covered_edges;
            break;
        }
    }
    return out;
}

}  // namespace

ScopeCost scope_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope,
                     std::span<const Structure> structures, bool charge_uncovered_labels) {
    ScopeCost out;
    const std::uint64_t scope_n = scope.nodes.size();
    const std::uint64_t scope_cells = scope_n * (scope_n - 1) / 2;

    std::uint64_t pattern_cells = 0;
    std::uint64_t full_pattern_cells = 0;
    std::uint64_t covered_edges = 0;
    std::uint64_t eplus_ones = 0;
    for (const Structure& s : structures) {
        const PatternCounts pc = count_pattern(g, s);
        pattern_cells += pc.cells;
        covered_edges += pc.covered_edges;
        if (!pc.exact) {
            full_pattern_cells += pc.cells;
            eplus_ones += pc.eplus_ones;
        }
        out.structure_bits += connectivity_cost(s, g.n()) + label_full_cost(s, tax, g).bits;
    }

    const std::uint64_t eplus_zeros = full_pattern_cells - eplus_ones;
    out.eplus_bits = nonzero_count_bits(eplus_ones) + prefix_code_cost(eplus_ones, eplus_zeros);

    const std::uint64_t eminus_ones = scope.edge_count - covered_edges;
    const std::uint64_t eminus_domain = scope_cells - pattern_cells;
    const std::uint64_t eminus_zeros = eminus_domain > eminus_ones ? eminus_domain - eminus_ones : 0;
    out.eminus_bits = nonzero_count_bits(eminus_ones) + prefix_code_cost(eminus_ones, eminus_zeros);

    if (charge_uncovered_labels) {
        std::vector<NodeId> covered;
        for (const Structure& s : structures) {
            const auto nodes = s.sorted_nodes();
            covered.insert(covered.end(), nodes.begin(), nodes.end());
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        std::vector<NodeId> uncovered;
        std::set_difference(scope.nodes.begin(), scope.nodes.end(), covered.begin(), covered.end(),
                            std::back_inserter(uncovered));
        out.uncovered_label_bits = labeling_error_cost(uncovered, tax, g);
    }
    return out;
}

double local_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope,
                  const Structure& s) {
    return scope_cost(g, tax, scope, {&s, 1}, false).total();
}

double unmodeled_cost(const HeteroGraph& g, const LabelTaxonomy& tax, const ScopeView& scope) {
    const std::uint64_t scope_n = scope.nodes.size();
    const std::uint64_t cells = scope_n * (scope_n - 1) / 2;
    const std::uint64_t ones = scope.edge_count;
    const std::uint64_t zeros = cells - ones;
    std::vector<NodeId> nodes(scope.nodes.begin(), scope.nodes.end());
    return nonzero_count_bits(ones) + prefix_code_cost(ones, zeros) +
           labeling_error_cost(nodes, tax, g);
}

ErrorState compute_errors(const Model& model, const HeteroGraph& g) {
    ErrorState err;
    std::unordered_set<std::uint64_t> claimed;
    std::vector<std::uint64_t> all_pattern_cells;
    std::uint64_t full_pattern_total = 0;
    std::vector<bool> covered(g.n(), false);

    for (const Structure& s : model.structures) {
        s.validate();
        for (NodeId v : s.primary) covered[v] = true;
        for (NodeId v : s.secondary) covered[v] = true;

        // Area edges this structure claims; no two structures may share one.
        std::vector<Edge> area;
        if (s.is_near()) {
            area = s.observed;
        } else {
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
                case StructureKind::FullBipartite: {
                    for (NodeId a : s.primary) {
                        for (NodeId v : g.neighbors(a)) {
                            if (std::binary_search(s.secondary.begin(), s.secondary.end(), v)) {
                                area.push_back(make_edge(a, v));
                            }
                        }
                    }
                    break;
                }
                case StructureKind::Chain: {
                    for (std::size_t i = 0; i + 1 < s.primary.size(); ++i) {
                        if (g.has_edge(s.primary[i], s.primary[i + 1])) {
                            area.push_back(make_edge(s.primary[i], s.primary[i + 1]));
                        }
                    }
                    break;
                }
                default:
                    break;
            }
        }
        for (const Edge& e : area) {
            if (!claimed.insert(cell_key(e.first, e.second)).second) {
                throw std::invalid_argument("model: overlapping edge areas");
            }
        }

        const bool full_kind = !s.is_near();
        s.for_each_pattern_cell([&](Edge cell) {
            all_pattern_cells.push_back(cell_key(cell.first, cell.second));
            if (full_kind && !g.has_edge(cell.first, cell.second)) {
                err.e_plus.push_back(cell);
            }
        });
        if (full_kind) full_pattern_total += s.pattern_cell_count();
    }

    // E+ cells can repeat when full patterns overlap on a non-edge; the error
    // set and its domain both count each cell once.
    std::sort(err.e_plus.begin(), err.e_plus.end());
    err.e_plus.erase(std::unique(err.e_plus.begin(), err.e_plus.end()), err.e_plus.end());

    std::sort(all_pattern_cells.begin(), all_pattern_cells.end());
    all_pattern_cells.erase(std::unique(all_pattern_cells.begin(), all_pattern_cells.end()),
                            all_pattern_cells.end());

    // Domain of E+: union of full-kind pattern areas. Overlap between full
    // patterns is rare; recount exactly when it happened.
    if (full_pattern_total > 0) {
        std::vector<std::uint64_t> full_cells;
        full_cells.reserve(full_pattern_total);
        for (const Structure& s : model.structures) {
            if (s.is_near()) continue;
            s.for_each_pattern_cell(
                [&](Edge cell) { full_cells.push_back(cell_key(cell.first, cell.second)); });
        }
        std::sort(full_cells.begin(), full_cells.end());
        full_cells.erase(std::unique(full_cells.begin(), full_cells.end()), full_cells.end());
        err.plus_domain_cells = full_cells.size();
    }

    const std::uint64_t n = g.n();
    const std::uint64_t total_cells = n * (n - 1) / 2;
    err.minus_domain_cells = total_cells - all_pattern_cells.size();

    for (NodeId u = 0; u < g.n(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v && !claimed.contains(cell_key(u, v))) {
                err.e_minus.emplace_back(u, v);
            }
        }
    }
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!covered[v]) err.uncovered_nodes.push_back(v);
    }
    return err;
}

CostBreakdown model_cost(const Model& model, const HeteroGraph& g, const LabelTaxonomy& tax) {
    CostBreakdown out;
    const std::size_t count = model.structures.size();
    out.structure_count_bits = universal_int_code_len(count + 1);
    out.type_composition_bits = weak_composition_code_len(count, kStructureKindCount);

    const auto type_counts = model.type_counts();
    out.per_structure.reserve(count);
    double structure_sum = 0.0;
    for (const Structure& s : model.structures) {
        CostBreakdown::PerStructure per;
        const double p = static_cast<double>(type_counts[static_cast<std::size_t>(s.kind)]) /
                         static_cast<double>(count);
        per.type_bits = -std::log2(p);
        per.connectivity_bits = connectivity_cost(s, g.n());
        per.label_bits = label_full_cost(s, tax, g).bits;
        structure_sum += per.type_bits + per.connectivity_bits + per.label_bits;
        out.per_structure.push_back(per);
    }
    out.model_bits = out.structure_count_bits + out.type_composition_bits + structure_sum;

    const ErrorState err = compute_errors(model, g);
    const std::uint64_t plus_ones = err.e_plus.size();
    const std::uint64_t plus_zeros = err.plus_domain_cells - plus_ones;
    out.error_plus_bits = nonzero_count_bits(plus_ones) + prefix_code_cost(plus_ones, plus_zeros);
    const std::uint64_t minus_ones = err.e_minus.size();
    const std::uint64_t minus_zeros =
        err.minus_domain_cells > minus_ones ? err.minus_domain_cells - minus_ones : 0;
    out.error_minus_bits = nonzero_count_bits(minus_ones) + prefix_code_cost(minus_ones, minus_zeros);
    out.labeling_error_bits = labeling_error_cost(err.uncovered_nodes, tax, g);
    out.total = out.model_bits + out.error_plus_bits + out.error_minus_bits + out.labeling_error_bits;
    return out;
}

}  // namespace hgs
