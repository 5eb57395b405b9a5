#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riset/graph.hpp"

namespace riset {

// Strict linear order on the vertices of a graph, stored as vertex -> rank.
class LinearOrder {
public:
    // ranks[v] = position of v; must be a bijection onto 0..n-1.
    static LinearOrder from_ranks(std::vector<int> ranks);
    // sequence[i] = vertex at rank i.
    static LinearOrder from_sequence(const std::vector<int>& sequence);
    static LinearOrder identity(int n);

    int vertex_count() const { return static_cast<int>(rank_.size()); }
    int rank_of(int v) const;
    // Vertices listed by increasing rank.
    std::vector<int> sequence() const;
    const std::vector<int>& ranks() const { return rank_; }

    bool operator==(const LinearOrder& o) const { return rank_ == o.rank_; }

private:
    std::vector<int> rank_;
};

struct ColorAssignment {
    std::vector<int> color;  // color[v] < palette_size
    int palette_size = 1;

    int vertex_count() const { return static_cast<int>(color.size()); }
    // Throws std::invalid_argument if a color id is out of range.
    void validate() const;
    // classes()[c] lists the vertices of color c in increasing order.
    std::vector<std::vector<int>> classes() const;
    // Distinct colors used by `verts`, sorted.
    std::vector<int> colors_used(const std::vector<int>& verts) const;
};

// Weakly r-reachable set of v under L: all u that are the L-minimum of some
// path of length <= r starting at v. Contains v; sorted.
std::vector<int> wreach(const Graph& g, const LinearOrder& order, int v, int r);

// wreach for every vertex at once (one restricted BFS per source of reach).
std::vector<std::vector<int>> wreach_all(const Graph& g, const LinearOrder& order, int r);

// max over v of |WReach_r[G,L,v]| under the given order.
int wcol_under_order(const Graph& g, const LinearOrder& order, int r);

enum class WcolMode { Exact, Heuristic };

struct WcolResult {
    int value = 0;
    LinearOrder witness;
};

// Weak r-coloring number. Exact mode enumerates every order (|V| <= 9,
// cap_exceeded otherwise) and returns the lexicographically least optimal
// order. Heuristic mode builds a greedy min-degree-last order; the value is
// then exact for that witness, an upper bound on the true wcol.
WcolResult wcol(const Graph& g, int r, WcolMode mode);

// Coloring by depth level in an exact elimination forest: palette = td(G),
// and any union of i color classes induces tree-depth at most i (the classes
// are levels of the forest, so i levels restrict to height <= i).
ColorAssignment low_treedepth_coloring(const Graph& g, int p, int treedepth_cap = 18);

enum class LtdBound { ClassCount, ClassCountMinusOne };

struct LtdReport {
    bool passed = true;
    std::vector<int> violating_classes;  // empty when passed
    int measured_depth = 0;
    int allowed_depth = 0;
    int unions_checked = 0;
};

// Checks every union of i <= p color classes against tree-depth bound i
// (ClassCount) or i-1 (ClassCountMinusOne). Stops at the first violation.
LtdReport verify_ltd(const Graph& g, const ColorAssignment& coloring, int p,
                     LtdBound bound_mode, int treedepth_cap = 18);

// Superset X' of X that realizes, inside G[X'], a path of exact length
// dist_G(u,v) for every pair of X at distance <= r. Adds the shortest path
// picked by BFS from the smaller endpoint with least-id predecessor walkback.
// Sorted. r = 1 returns X unchanged: adjacent pairs are already realized.
std::vector<int> shortest_path_closure(const Graph& g, const std::vector<int>& x, int r);

// True when G[subset] realizes dist_G(u,v) for every pair of `inner` at
// distance <= r in G. `inner` must be contained in `subset`.
bool realizes_close_distances(const Graph& g, const std::vector<int>& subset,
                              const std::vector<int>& inner, int r);

// Refines c by the L-ordered sequence of c-colors over WReach_r[G,L,v] plus
// the position of v in that sequence. Equal refined color implies equal
// original color. Color ids follow sorted profile order, so the output is
// determined by (G, c, r, L) alone.
ColorAssignment excellent_refinement(const Graph& g, const ColorAssignment& c, int r,
                                     const LinearOrder& order);

struct AuditReport {
    int samples = 0;
    int failures = 0;
    bool passed = true;
    std::vector<std::string> violations;
};

// For each sample X: builds X' = shortest_path_closure(G, X, r), re-verifies
// the closure property from distances, and checks that X' uses at most
// d * (number of refined colors on X) original colors.
AuditReport audit_excellence(const Graph& g, const ColorAssignment& c,
                             const ColorAssignment& refined, int r, std::int64_t d,
                             const std::vector<std::vector<int>>& sample_sets);

// Budget d_r = product over l = 2..r of 2 * wcol_l(G); 1 when r < 2.
// Throws std::overflow_error if the product leaves int64 range.
std::int64_t excellence_budget(const Graph& g, int r, WcolMode mode);

}  // namespace riset
