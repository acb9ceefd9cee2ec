#include "hgs/taxonomy.hpp"

#include <algorithm>
#include <cmath>

#include "hgs/util.hpp"

namespace hgs {

namespace {
std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= path.size()) {
        std::size_t slash = path.find('/', start);
        if (slash == std::string::npos) slash = path.size();
        parts.emplace_back(path.substr(start, slash - start));
        start = slash + 1;
    }
    return parts;
}
}  // namespace

LabelTaxonomy LabelTaxonomy::from_paths(const std::vector<std::string>& paths) {
    LabelTaxonomy tax;
    for (const std::string& path : paths) {
        if (path.empty()) throw InputError("taxonomy: empty label path");
        const std::vector<std::string> parts = split_path(path);
        LabelId parent = kNoLabel;
        std::string prefix;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].empty()) throw InputError("taxonomy: empty segment in path '" + path + "'");
            if (!prefix.empty()) prefix += '/';
            prefix += parts[i];
            auto it = tax.index_.find(prefix);
            LabelId id;
            if (it == tax.index_.end()) {
                id = static_cast<LabelId>(tax.entries_.size());
                Entry e;
                e.name = parts[i];
                e.parent = parent;
                e.depth = static_cast<int>(i) + 1;
                tax.entries_.push_back(std::move(e));
                tax.index_.emplace(prefix, id);
                if (parent == kNoLabel) {
                    tax.roots_.push_back(id);
                } else {
                    tax.entries_[static_cast<std::size_t>(parent)].children.push_back(id);
                }
                tax.h_ = std::max(tax.h_, static_cast<int>(i) + 1);
            } else {
                id = it->second;
            }
            parent = id;
        }
    }
    if (tax.entries_.empty()) throw InputError("taxonomy: no label paths given");

    for (auto& e : tax.entries_) {
        e.sibling_count = e.parent == kNoLabel
                              ? static_cast<std::uint32_t>(tax.roots_.size())
                              : static_cast<std::uint32_t>(
                                    tax.entries_[static_cast<std::size_t>(e.parent)].children.size());
    }
    tax.ancestors_.resize(tax.entries_.size());
    tax.sibling_bits_.resize(tax.entries_.size());
    for (std::size_t i = 0; i < tax.entries_.size(); ++i) {
        std::vector<LabelId> chain;
        for (LabelId cur = static_cast<LabelId>(i); cur != kNoLabel;
             cur = tax.entries_[static_cast<std::size_t>(cur)].parent) {
            chain.push_back(cur);
        }
        std::reverse(chain.begin(), chain.end());
        std::vector<double> bits(chain.size());
        for (std::size_t k = 0; k < chain.size(); ++k) {
            bits[k] = std::log2(
                static_cast<double>(tax.entries_[static_cast<std::size_t>(chain[k])].sibling_count));
        }
        tax.ancestors_[i] = std::move(chain);
        tax.sibling_bits_[i] = std::move(bits);
    }
    return tax;
}

LabelId LabelTaxonomy::resolve(const std::string& slash_path) const {
    auto it = index_.find(slash_path);
    return it == index_.end() ? kNoLabel : it->second;
}

LabelId LabelTaxonomy::ancestor_at(LabelId id, int level) const {
    const auto& chain = ancestors_[static_cast<std::size_t>(id)];
    if (level < 1 || static_cast<std::size_t>(level) > chain.size()) return kNoLabel;
    return chain[static_cast<std::size_t>(level) - 1];
}

std::uint32_t LabelTaxonomy::sibling_count_at(LabelId id, int level) const {
    LabelId anc = ancestor_at(id, level);
    return anc == kNoLabel ? 1u : entries_[static_cast<std::size_t>(anc)].sibling_count;
}

double LabelTaxonomy::sibling_bits_at(LabelId id, int level) const {
    const auto& chain = ancestors_[static_cast<std::size_t>(id)];
    if (level < 1 || static_cast<std::size_t>(level) > chain.size()) return 0.0;
    return sibling_bits_[static_cast<std::size_t>(id)][static_cast<std::size_t>(level) - 1];
}

std::uint32_t LabelTaxonomy::sibling_count(const std::string& slash_path, int level) const {
    LabelId id = resolve(slash_path);
    if (id == kNoLabel) throw InputError("taxonomy: unknown label path '" + slash_path + "'");
    if (level < 1 || level > depth(id)) {
        throw InputError("taxonomy: level out of range for path '" + slash_path + "'");
    }
    return sibling_count_at(id, level);
}

std::string LabelTaxonomy::path_string(LabelId id) const {
    const auto& chain = ancestors_[static_cast<std::size_t>(id)];
    std::string out;
    for (LabelId link : chain) {
        if (!out.empty()) out += '/';
        out += entries_[static_cast<std::size_t>(link)].name;
    }
    return out;
}

std::vector<std::string> LabelTaxonomy::all_paths() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].children.empty()) out.push_back(path_string(static_cast<LabelId>(i)));
    }
    return out;
}

}  // namespace hgs
