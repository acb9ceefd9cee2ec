#include "hgs/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgs {

const char* kind_code(StructureKind k) {
    switch (k) {
        case StructureKind::Star: return "st";
        case StructureKind::FullClique: return "fc";
        case StructureKind::NearClique: return "nc";
        case StructureKind::FullBipartite: return "bc";
        case StructureKind::NearBipartite: return "nb";
        case StructureKind::Chain: return "ch";
    }
    return "??";
}

StructureKind kind_from_code(const std::string& code) {
    if (code == "st") return StructureKind::Star;
    if (code == "fc") return StructureKind::FullClique;
    if (code == "nc") return StructureKind::NearClique;
    if (code == "bc") return StructureKind::FullBipartite;
    if (code == "nb") return StructureKind::NearBipartite;
    if (code == "ch") return StructureKind::Chain;
    throw InputError("unknown structure kind '" + code + "'");
}

std::uint64_t Structure::pattern_cell_count() const {
    switch (kind) {
        case StructureKind::Star:
            return secondary.size();
        case StructureKind::FullClique:
        case StructureKind::NearClique: {
            const std::uint64_t s = primary.size();
            return s * (s - 1) / 2;
        }
        case StructureKind::FullBipartite:
        case StructureKind::NearBipartite:
            return static_cast<std::uint64_t>(primary.size()) * secondary.size();
        case StructureKind::Chain:
            return primary.empty() ? 0 : primary.size() - 1;
    }
    return 0;
}

std::vector<NodeId> Structure::sorted_nodes() const {
    std::vector<NodeId> nodes;
    nodes.reserve(size());
    nodes.insert(nodes.end(), primary.begin(), primary.end());
    nodes.insert(nodes.end(), secondary.begin(), secondary.end());
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

void Structure::validate() const {
    auto sorted_unique = [](const std::vector<NodeId>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i - 1] >= v[i]) return false;
        return true;
    };
    switch (kind) {
        case StructureKind::Star: {
            if (primary.size() != 1 || secondary.size() < 2)
                throw std::invalid_argument("star: needs one hub and >= 2 spokes");
            if (!sorted_unique(secondary)) throw std::invalid_argument("star: spokes not sorted/unique");
            if (std::binary_search(secondary.begin(), secondary.end(), primary[0]))
                throw std::invalid_argument("star: hub among spokes");
            break;
        }
        case StructureKind::FullClique:
            if (primary.size() < 2 || !secondary.empty())
                throw std::invalid_argument("full clique: needs >= 2 nodes");
            if (!sorted_unique(primary)) throw std::invalid_argument("clique: nodes not sorted/unique");
            break;
        case StructureKind::NearClique:
            if (primary.size() < 3 || !secondary.empty())
                throw std::invalid_argument("near clique: needs >= 3 nodes");
            if (!sorted_unique(primary)) throw std::invalid_argument("clique: nodes not sorted/unique");
            break;
        case StructureKind::FullBipartite:
        case StructureKind::NearBipartite: {
            if (primary.empty() || secondary.empty())
                throw std::invalid_argument("bipartite core: both sides must be non-empty");
            if (!sorted_unique(primary) || !sorted_unique(secondary))
                throw std::invalid_argument("bipartite core: sides not sorted/unique");
            for (NodeId a : primary)
                if (std::binary_search(secondary.begin(), secondary.end(), a))
                    throw std::invalid_argument("bipartite core: sides overlap");
            break;
        }
        case StructureKind::Chain: {
            if (primary.size() < 3 || !secondary.empty())
                throw std::invalid_argument("chain: needs >= 3 nodes");
            std::vector<NodeId> copy = primary;
            std::sort(copy.begin(), copy.end());
            if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
                throw std::invalid_argument("chain: repeated node");
            break;
        }
    }
}

}  // namespace hgs
