#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hgs/util.hpp"

namespace hgs {

// The six-element structure vocabulary.
enum class StructureKind : std::uint8_t {
    Star = 0,
    FullClique = 1,
    NearClique = 2,
    FullBipartite = 3,
    NearBipartite = 4,
    Chain = 5,
};

inline constexpr int kStructureKindCount = 6;

const char* kind_code(StructureKind k);                 // "st", "fc", ...
StructureKind kind_from_code(const std::string& code);  // throws InputError

// One vocabulary element with role-annotated node sets.
//
// Node-set layout by kind:
//   Star          primary = {hub}, secondary = spokes (sorted)
//   FullClique    primary = node set (sorted)
//   NearClique    primary = node set (sorted), observed = present edges
//   FullBipartite primary = side A (sorted), secondary = side B (sorted)
//   NearBipartite sides as above, observed = present edges across the sides
//   Chain         primary = node sequence in chain order
struct Structure {
    StructureKind kind;
    std::vector<NodeId> primary;
    std::vector<NodeId> secondary;
    std::vector<Edge> observed;  // near kinds only; sorted, u < v

    std::size_t size() const { return primary.size() + secondary.size(); }

    bool has_roles() const {
        return kind == StructureKind::Star || kind == StructureKind::FullBipartite ||
               kind == StructureKind::NearBipartite;
    }

    bool is_near() const {
        return kind == StructureKind::NearClique || kind == StructureKind::NearBipartite;
    }

    // Cells of the pattern this structure models. Near kinds model their whole
    // candidate area (every pair for nc, A x B for nb) exactly.
    std::uint64_t pattern_cell_count() const;

    // Enumerates pattern cells as normalized edges.
    template <typename Fn>
    void for_each_pattern_cell(Fn&& fn) const {
        switch (kind) {
            case StructureKind::Star:
                for (NodeId s : secondary) fn(make_edge(primary[0], s));
                break;
            case StructureKind::FullClique:
            case StructureKind::NearClique:
                for (std::size_t i = 0; i < primary.size(); ++i)
                    for (std::size_t j = i + 1; j < primary.size(); ++j)
                        fn(make_edge(primary[i], primary[j]));
                break;
            case StructureKind::FullBipartite:
            case StructureKind::NearBipartite:
                for (NodeId a : primary)
                    for (NodeId b : secondary) fn(make_edge(a, b));
                break;
            case StructureKind::Chain:
                for (std::size_t i = 0; i + 1 < primary.size(); ++i)
                    fn(make_edge(primary[i], primary[i + 1]));
                break;
        }
    }

    // All member nodes, sorted ascending.
    std::vector<NodeId> sorted_nodes() const;

    // Checks the kind's size/shape invariants; throws std::invalid_argument.
    void validate() const;
};

// Ordered list of structures; the edge areas must be pairwise disjoint
// (enforced at assembly, re-checked when costing).
struct Model {
    std::vector<Structure> structures;

    std::array<std::uint32_t, kStructureKindCount> type_counts() const {
        std::array<std::uint32_t, kStructureKindCount> counts{};
        for (const auto& s : structures) counts[static_cast<std::size_t>(s.kind)]++;
        return counts;
    }
};

// Derived error state of a model against a graph.
struct ErrorState {
    std::vector<Edge> e_plus;               // over-modeled cells (in model pattern, not in G)
    std::vector<Edge> e_minus;              // under-modeled edges (in G, in no pattern)
    std::vector<NodeId> uncovered_nodes;    // nodes in no structure (en)
    std::uint64_t plus_domain_cells = 0;    // |union of full-pattern areas|
    std::uint64_t minus_domain_cells = 0;   // cells outside every pattern area
};

// Per-term bit accounting for L(G, M).
struct CostBreakdown {
    struct PerStructure {
        double type_bits = 0.0;          // -log2 P(x(s) | M)
        double connectivity_bits = 0.0;  // L_t(s)
        double label_bits = 0.0;         // L_a(s)
    };

    double structure_count_bits = 0.0;    // L_N(|M| + 1)
    double type_composition_bits = 0.0;   // weak composition over the vocabulary
    std::vector<PerStructure> per_structure;
    double model_bits = 0.0;              // L(M)
    double error_plus_bits = 0.0;         // L(E+)
    double error_minus_bits = 0.0;        // L(E-)
    double labeling_error_bits = 0.0;     // L(E^a)
    double total = 0.0;                   // L(G, M)
};

}  // namespace hgs
