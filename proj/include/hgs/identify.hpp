#pragma once

#include <optional>
#include <vector>

#include "hgs/decompose.hpp"
#include "hgs/encoding.hpp"
#include "hgs/structure.hpp"

namespace hgs {

// A structure with the local cost it was selected at.
struct IdentifiedStructure {
    Structure structure;
    double local_bits = 0.0;
};

// Role assignment per kind (section-4 heuristics). Encoders return nullopt
// when the candidate cannot form an admissible structure of that kind.
std::optional<Structure> encode_as_star(const CandidateSubgraph& sub, const HeteroGraph& g);
std::pair<std::optional<Structure>, std::optional<Structure>> encode_as_clique(
    const CandidateSubgraph& sub);  // (fc, nc)
std::pair<std::optional<Structure>, std::optional<Structure>> encode_as_bipartite(
    const CandidateSubgraph& sub);  // (bc, nb)
std::optional<Structure> encode_as_chain(const CandidateSubgraph& sub, std::uint64_t start_seed);

// Minimum admissible node counts: fc 2, everything else 3.
bool kind_admissible(StructureKind kind, std::size_t node_count);

// Evaluates every admissible encoding and keeps the cheapest local cost,
// breaking ties in the fixed order st < fc < nc < bc < nb < ch.
std::optional<IdentifiedStructure> best_structure(const CandidateSubgraph& sub,
                                                  const HeteroGraph& g, const LabelTaxonomy& tax,
                                                  std::uint64_t seed,
                                                  std::uint32_t candidate_index);

// Identification across candidates; parallel with a deterministic merge.
std::vector<std::optional<IdentifiedStructure>> identify_candidates(
    const std::vector<CandidateSubgraph>& candidates, const HeteroGraph& g,
    const LabelTaxonomy& tax, std::uint64_t seed, unsigned threads);

}  // namespace hgs
