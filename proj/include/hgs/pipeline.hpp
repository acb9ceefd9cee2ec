#pragma once

#include <cstdint>
#include <vector>

#include "hgs/assemble.hpp"
#include "hgs/decompose.hpp"
#include "hgs/identify.hpp"
#include "hgs/segment.hpp"

namespace hgs {

struct PipelineOptions {
    DecomposeConfig decompose;  // zero fields resolve to defaults_for(n)
    Strategy strategy = Strategy::Vanilla;
    std::uint32_t top_k = 100;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Per-identified-structure segmentation record, for `segment-trace`.
struct StructureTraceEntry {
    std::uint32_t candidate_index = 0;
    Structure input;
    SegmentTrace trace;
};

// Identification + segmentation + gain scoring, flattened in candidate
// emission order. Parallel across candidates with a deterministic merge.
std::vector<CandidateEntry> build_candidate_entries(
    const std::vector<CandidateSubgraph>& candidates, const HeteroGraph& g,
    const LabelTaxonomy& tax, std::uint64_t seed, unsigned threads,
    std::vector<StructureTraceEntry>* traces = nullptr);

struct PipelineResult {
    std::vector<CandidateSubgraph> candidates;
    std::vector<CandidateEntry> entries;
    AssembleResult assembled;
};

PipelineResult run_pipeline(const HeteroGraph& g, const LabelTaxonomy& tax,
                            const PipelineOptions& opts,
                            std::vector<StructureTraceEntry>* traces = nullptr);

}  // namespace hgs
