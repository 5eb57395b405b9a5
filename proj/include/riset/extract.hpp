#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "riset/family.hpp"
#include "riset/forest.hpp"
#include "riset/graph.hpp"
#include "riset/sparsity.hpp"

namespace riset {

// Split level of a family on a rooted tree: the least t such that some node
// at depth t-1 has at least two child subtrees containing family vertices,
// or height(f) when no node splits. Requires f to be a tree whose universe
// contains every family vertex.
int t_split_level(const RootedForest& f, const IndependentFamily& fam);

// Root-to-split-node path context for distance-vector classification.
struct SpineContext {
    RootedForest forest;
    Graph base_graph;
    int r = 1;
    std::vector<int> spine;  // v_1 (root) .. v_q (split node)

    int q() const { return static_cast<int>(spine.size()); }
};

// Builds the context for a family with a genuine split node (split level
// < height); throws std::invalid_argument when every node has at most one
// populated child subtree.
SpineContext build_spine_context(const Graph& g, const RootedForest& f, int r,
                                 const IndependentFamily& fam);

// Distances from a vertex to each spine vertex, capped at r+1 (which also
// stands for unreachable).
struct DistanceVector {
    std::vector<int> entries;

    bool operator==(const DistanceVector& o) const { return entries == o.entries; }
};

DistanceVector distance_vector(const SpineContext& ctx, int v);
std::vector<DistanceVector> distance_vectors(const SpineContext& ctx);

enum class ClaimVerdict { Adjacent, NonAdjacent, Undetermined };

// Adjacency in the r-power decided from capped spine distances alone:
// a_i + b_i <= r for some i forces a path through spine vertex i, so
// Adjacent. When every sum exceeds r the vertices can only be adjacent
// through a path avoiding the spine, impossible across different subtrees;
// NonAdjacent needs that cross-subtree hypothesis, else Undetermined.
ClaimVerdict claim_adjacency(const DistanceVector& a, const DistanceVector& b, int r,
                             bool cross_subtree);

struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::pair<int, int>> edges;  // (left index, right index)
};

struct MatchingCover {
    std::vector<std::pair<int, int>> matching;  // (left, right) pairs
    std::vector<int> left_cover;
    std::vector<int> right_cover;

    int cover_size() const {
        return static_cast<int>(left_cover.size() + right_cover.size());
    }
};

// Maximum matching by augmenting paths (left indices scanned in order, so
// the result is deterministic) plus a minimum vertex cover of equal size
// built from the alternating-reachability construction.
MatchingCover bipartite_matching_and_cover(const BipartiteGraph& b);

using ExtractOutcome = std::variant<RainbowSelection, FailureReport>;

// Recursive rainbow extraction over a tree f whose closure contains g, for a
// family of independent sets in power(g, r). Set indices in the result refer
// to the caller's family. Success is guaranteed at the recurrence threshold;
// below it every pigeonhole keeps its largest bucket and a starved stage is
// reported instead. std::logic_error signals a broken internal invariant,
// never an undersized family.
ExtractOutcome extract_treedepth(const Graph& g, const RootedForest& f, int r,
                                 const IndependentFamily& fam);

// Wrapper computing an exact elimination tree for g, attaching a fresh root,
// and running extract_treedepth on the extended graph.
ExtractOutcome extract_treedepth_graph(const Graph& g, int r, const IndependentFamily& fam,
                                       int treedepth_cap = 18);

struct BePipelineOptions {
    WcolMode wcol_mode = WcolMode::Heuristic;
    // A pigeonhole stage that keeps fewer members than this fails instead.
    int min_subfamily = 1;
    int treedepth_cap = 18;
};

// Pipeline for powers of sparse graphs: low tree-depth coloring, refinement
// by weak-reachability profiles, pigeonhole onto n refined classes, shortest
// path closure of their union, then tree-depth extraction on the closed
// subgraph. The closure step must leave power-adjacency on the class union
// unchanged; a violation throws std::logic_error.
ExtractOutcome extract_bounded_expansion(const Graph& g, int r, int n,
                                         const IndependentFamily& fam,
                                         const BePipelineOptions& opts = {});

// Picked edges with the index of the matching each one came from.
struct MatchingSelection {
    std::vector<std::pair<Edge, int>> picks;
};

using MatchingOutcome = std::variant<MatchingSelection, FailureReport>;

// Rainbow induced matching via the 1-subdivision: each matching maps to its
// subdivision vertices, which are pairwise at distance >= 6 there, so the
// images are independent sets in the 5th power. Extraction runs over the
// subdivision (exact elimination tree when it is small enough, DFS tree
// otherwise) and the picks map back to edges of g.
MatchingOutcome rainbow_induced_matching(const Graph& g, int n,
                                         const std::vector<std::vector<Edge>>& matchings,
                                         int treedepth_cap = 18);

// True when all pairwise distances within verts are >= k (unreachable pairs
// count as far).
bool pairwise_distance_at_least(const Graph& g, const std::vector<int>& verts, int k);

// Empty string when m is an induced matching of size n in g: n disjoint
// edges with no other edges between their endpoints. Otherwise the first
// violation.
std::string induced_matching_error(const Graph& g, const std::vector<Edge>& m, int n);

}  // namespace riset
