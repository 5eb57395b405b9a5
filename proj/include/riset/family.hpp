#pragma once

#include <string>
#include <vector>

#include "riset/graph.hpp"

namespace riset {

// Ordered list of independent sets, all of the same size, over one host graph.
// Repetition across members is allowed; vertices inside a member are sorted
// and distinct. Member order is significant: selections refer to indices.
struct IndependentFamily {
    int set_size = 0;
    std::vector<std::vector<int>> sets;

    int size() const { return static_cast<int>(sets.size()); }
};

// Validates every member against `host` and throws std::invalid_argument on
// the first violation (size mismatch, out of range, unsorted/duplicate
// vertices, or a member that is not independent).
IndependentFamily make_family(const Graph& host, int set_size,
                              std::vector<std::vector<int>> sets);

// Sub-family with the given member indices, preserving order.
IndependentFamily subfamily(const IndependentFamily& fam, const std::vector<int>& indices);

struct RainbowPick {
    int vertex = 0;
    int set_index = 0;
};

// A rainbow witness: distinct vertices forming an independent set in `host`,
// matched injectively to family members that contain them.
struct RainbowSelection {
    std::vector<RainbowPick> picks;
};

// Empty string when `sel` is a valid rainbow witness of size fam.set_size
// for `fam` over `host`; otherwise a description of the first violation.
std::string selection_error(const Graph& host, const IndependentFamily& fam,
                            const RainbowSelection& sel);

inline bool selection_valid(const Graph& host, const IndependentFamily& fam,
                            const RainbowSelection& sel) {
    return selection_error(host, fam, sel).empty();
}

// Diagnostic emitted when an extraction gives up: which stage starved, how
// deep the recursion was, and how many family members remained.
struct FailureReport {
    std::string stage;
    int depth = 0;
    int family_size = 0;
    std::string detail;
};

}  // namespace riset
