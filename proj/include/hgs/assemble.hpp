#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgs/encoding.hpp"
#include "hgs/structure.hpp"

namespace hgs {

enum class Strategy : std::uint8_t { Vanilla, TopK, Benefit };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // throws InputError

// A scored candidate structure in decomposition emission order.
struct CandidateEntry {
    Structure structure;
    double local_bits = 0.0;
    double gain = 0.0;  // bits saved vs. leaving its subgraph unmodeled; may be negative
    std::uint32_t candidate_index = 0;
};

// Bits saved by encoding the structure's own induced subgraph as `s` instead
// of dumping its edges into E- and its labels into E^a.
double compute_gain(const HeteroGraph& g, const LabelTaxonomy& tax, const Structure& s);

struct AssembleResult {
    Model model;
    ErrorState errors;
    CostBreakdown cost;
    std::size_t structures_dropped = 0;  // lost their minimum size to trimming
};

// Builds the final model under the chosen strategy, enforcing edge-disjoint
// areas by first-wins trimming in the selection order (Vanilla: emission
// order; TopK/Benefit: descending gain, ties by candidate index). TopK keeps
// selecting past trimming casualties until k structures survive.
AssembleResult assemble(const std::vector<CandidateEntry>& candidates, Strategy strategy,
                        std::uint32_t top_k, const HeteroGraph& g, const LabelTaxonomy& tax);

// Decoder direction of the lossless contract: pattern cells of the model
// (exact edges for near kinds) XOR E+ XOR E-.
std::vector<Edge> reconstruct(const Model& model, std::span<const Edge> e_plus,
                              std::span<const Edge> e_minus, std::uint32_t n);

}  // namespace hgs
