#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "riset/family.hpp"
#include "riset/graph.hpp"

namespace riset {

// Exhaustive rainbow search by backtracking over family indices in
// increasing order, trying member vertices in increasing order, so the
// returned selection is the lexicographically first one. Throws
// cap_exceeded after `node_cap` search nodes; a normal return of nullopt
// means no rainbow exists.
std::optional<RainbowSelection> find_rainbow_bruteforce(const Graph& host,
                                                        const IndependentFamily& fam,
                                                        long node_cap = 10'000'000);

// All independent sets of size n, each sorted, listed in lexicographic order.
std::vector<std::vector<int>> independent_n_sets(const Graph& g, int n);

struct FExactResult {
    // Smallest k such that every family of k independent n-sets has a
    // rainbow; empty when the search hit the cap.
    std::optional<int> value;
    // Best lower bound on the value (= value when exact).
    int lower_bound = 1;
    // A maximum rainbow-free family (size value-1) when exact; otherwise the
    // largest rainbow-free family found before the cap.
    IndependentFamily witness_bad_family;
};

// Exact minimum family size forcing a rainbow, by maximizing rainbow-free
// multisets of independent n-sets. Each set is used at most n-1 times: n
// copies of one set always contain their own rainbow (the set's n vertices,
// one per copy), so rainbow-free families never need higher multiplicity.
// `node_cap` bounds the number of rainbow checks.
FExactResult f_exact(const Graph& g, int n, long node_cap = 10'000'000);

struct WorstFamily {
    Graph host;
    IndependentFamily family;
};

// k parts of size part_size, pairwise completely joined; the family takes
// the first n vertices of each part, each such set repeated `multiplicity`
// times. For n >= 2 any rainbow would need two nonadjacent vertices in
// different parts, so none exists. Requires n >= 2 and part_size >= n.
WorstFamily worst_family_multipartite(int k, int part_size, int n, int multiplicity = 1);

struct ChromaticCheckReport {
    int bound = 0;
    int trials = 0;
    int passes = 0;
    std::uint64_t seed = 0;
    bool vacuous = false;  // no independent n-set exists
    std::optional<IndependentFamily> counterexample;
};

// Samples `trials` random families of size chi(G)(n-1)+1 over the
// independent n-sets of G (seeded, uniform with replacement) and checks each
// has a rainbow. A counterexample is kept verbatim; it would indicate a bug
// here, not a falsified bound.
ChromaticCheckReport check_chromatic_bound(const Graph& g, int n, int trials,
                                           std::uint64_t seed, int chromatic_cap = 16);

}  // namespace riset
