#include "riset/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace riset {

IndependentFamily make_family(const Graph& host, int set_size,
                              std::vector<std::vector<int>> sets) {
    if (set_size < 1) throw std::invalid_argument("set_size must be positive");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        std::string where = "family member " + std::to_string(i);
        if (static_cast<int>(s.size()) != set_size)
            throw std::invalid_argument(where + " has size " + std::to_string(s.size()) +
                                        ", expected " + std::to_string(set_size));
        for (int v : s)
            if (v < 0 || v >= host.vertex_count())
                throw std::invalid_argument(where + " contains out-of-range vertex " +
                                            std::to_string(v));
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument(where + " must list distinct vertices in increasing order");
        if (!is_independent(host, s))
            throw std::invalid_argument(where + " is not independent in the host graph");
    }
    return IndependentFamily{set_size, std::move(sets)};
}

IndependentFamily subfamily(const IndependentFamily& fam, const std::vector<int>& indices) {
    IndependentFamily out;
    out.set_size = fam.set_size;
    out.sets.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= fam.size())
            throw std::invalid_argument("subfamily index out of range");
        out.sets.push_back(fam.sets[i]);
    }
    return out;
}

std::string selection_error(const Graph& host, const IndependentFamily& fam,
                            const RainbowSelection& sel) {
    if (static_cast<int>(sel.picks.size()) != fam.set_size)
        return "selection has " + std::to_string(sel.picks.size()) + " picks, expected " +
               std::to_string(fam.set_size);
    std::vector<int> verts, idxs;
    for (const auto& p : sel.picks) {
        if (p.vertex < 0 || p.vertex >= host.vertex_count())
            return "pick vertex " + std::to_string(p.vertex) + " out of range";
        if (p.set_index < 0 || p.set_index >= fam.size())
            return "pick set index " + std::to_string(p.set_index) + " out of range";
        const auto& member = fam.sets[p.set_index];
        if (!std::binary_search(member.begin(), member.end(), p.vertex))
            return "family member " + std::to_string(p.set_index) + " does not contain vertex " +
                   std::to_string(p.vertex);
        verts.push_back(p.vertex);
        idxs.push_back(p.set_index);
    }
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        return "selection repeats a vertex";
    std::sort(idxs.begin(), idxs.end());
    if (std::adjacent_find(idxs.begin(), idxs.end()) != idxs.end())
        return "selection repeats a family member";
    if (!is_independent(host, verts)) return "selected vertices are not independent";
    return "";
}

}  // namespace riset
