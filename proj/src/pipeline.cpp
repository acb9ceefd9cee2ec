#include "hgs/pipeline.hpp"

#include "hgs/util.hpp"

namespace hgs {

std::vector<CandidateEntry> build_candidate_entries(
    const std::vector<CandidateSubgraph>& candidates, const HeteroGraph& g,
    const LabelTaxonomy& tax, std::uint64_t seed, unsigned threads,
    std::vector<StructureTraceEntry>* traces) {
    struct PerCandidate {
        std::vector<Structure> parts;
        Structure input;
        SegmentTrace trace;
        bool identified = false;
    };
    std::vector<PerCandidate> work(candidates.size());

    const SegmentContext ctx{g, tax};
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        auto identified = best_structure(candidates[i], g, tax, seed, static_cast<std::uint32_t>(i));
        if (!identified) return;
        PerCandidate& pc = work[i];
        pc.identified = true;
        pc.input = identified->structure;
        pc.parts = hierarchical_segment(identified->structure, ctx,
                                        traces ? &pc.trace : nullptr);
    });

    // Flatten in emission order, then score gains in parallel.
    std::vector<CandidateEntry> entries;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!work[i].identified) continue;
        if (traces) {
            traces->push_back(StructureTraceEntry{static_cast<std::uint32_t>(i),
                                                  std::move(work[i].input),
                                                  std::move(work[i].trace)});
        }
        for (Structure& part : work[i].parts) {
            CandidateEntry e;
            e.structure = std::move(part);
            e.candidate_index = static_cast<std::uint32_t>(entries.size());
            entries.push_back(std::move(e));
        }
    }
    parallel_for(entries.size(), threads, [&](std::size_t i) {
        const std::vector<NodeId> nodes = entries[i].structure.sorted_nodes();
        const std::vector<Edge> edges = g.induced_edges(nodes);
        const ScopeView scope{{nodes.data(), nodes.size()}, edges.size()};
        entries[i].local_bits = local_cost(g, tax, scope, entries[i].structure);
        entries[i].gain = unmodeled_cost(g, tax, scope) - entries[i].local_bits;
    });
    return entries;
}

PipelineResult run_pipeline(const HeteroGraph& g, const LabelTaxonomy& tax,
                            const PipelineOptions& opts,
                            std::vector<StructureTraceEntry>* traces) {
    PipelineResult out;
    DecomposeConfig cfg = opts.decompose;
    const DecomposeConfig defaults = DecomposeConfig::defaults_for(g.n());
    if (cfg.hubs_per_iter == 0) cfg.hubs_per_iter = defaults.hubs_per_iter;
    if (cfg.gcc_stop_threshold == 0) cfg.gcc_stop_threshold = cfg.hubs_per_iter;
    if (cfg.min_subgraph_nodes == 0) cfg.min_subgraph_nodes = defaults.min_subgraph_nodes;

    out.candidates = slashburn_decompose(g, cfg, opts.seed);
    out.entries = build_candidate_entries(out.candidates, g, tax, opts.seed, opts.threads, traces);
    out.assembled = assemble(out.entries, opts.strategy, opts.top_k, g, tax);
    return out;
}

}  // namespace hgs
