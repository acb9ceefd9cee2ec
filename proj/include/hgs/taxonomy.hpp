#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hgs {

using LabelId = std::int32_t;
inline constexpr LabelId kNoLabel = -1;

// Rooted forest of label names. Levels are counted from 1; a node's label is a
// path from some root, and different nodes may stop at different depths.
//
// Immutable after construction; safe for concurrent reads.
class LabelTaxonomy {
public:
    struct Entry {
        std::string name;
        LabelId parent = kNoLabel;
        int depth = 1;  // level of this entry
        std::uint32_t sibling_count = 1;  // entries sharing the parent (roots share the virtual root)
        std::vector<LabelId> children;
    };

    // Builds the forest from slash-joined label paths. Every path prefix
    // becomes an entry; duplicates are merged.
    static LabelTaxonomy from_paths(const std::vector<std::string>& paths);

    int h() const { return h_; }
    std::uint32_t root_count() const { return static_cast<std::uint32_t>(roots_.size()); }
    const std::vector<LabelId>& roots() const { return roots_; }
    std::size_t entry_count() const { return entries_.size(); }
    const Entry& entry(LabelId id) const { return entries_[static_cast<std::size_t>(id)]; }

    // Full path -> label id, or kNoLabel when the path is unknown.
    LabelId resolve(const std::string& slash_path) const;

    // Ancestor of `id` at `level` (1-based), or kNoLabel when level > depth(id).
    LabelId ancestor_at(LabelId id, int level) const;

    int depth(LabelId id) const { return entries_[static_cast<std::size_t>(id)].depth; }

    // Number of sibling labels of the ancestor at `level` (the l^b quantity).
    std::uint32_t sibling_count_at(LabelId id, int level) const;

    // log2 of the above; 0 when the label has no segment at `level`.
    double sibling_bits_at(LabelId id, int level) const;

    // Spec-facing query: siblings of the level-`level` segment of a path.
    // Throws InputError on an unknown path or an out-of-range level.
    std::uint32_t sibling_count(const std::string& slash_path, int level) const;

    std::string path_string(LabelId id) const;

    // All full paths in deterministic (construction) order, for serialization.
    std::vector<std::string> all_paths() const;

private:
    std::vector<Entry> entries_;
    std::vector<LabelId> roots_;
    std::unordered_map<std::string, LabelId> index_;  // full slash path -> id
    // ancestors_[id] = chain root..self, so ancestors_[id][k-1] is the level-k segment.
    std::vector<std::vector<LabelId>> ancestors_;
    std::vector<std::vector<double>> sibling_bits_;  // aligned with ancestors_
    int h_ = 1;
};

}  // namespace hgs
