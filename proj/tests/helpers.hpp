#pragma once

// Shared test utilities: seeded random instances plus small independent
// oracles (distance, tree-depth, weak reachability, rainbow existence) used
// to cross-check the library implementations.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "riset/family.hpp"
#include "riset/forest.hpp"
#include "riset/graph.hpp"
#include "riset/oracle.hpp"
#include "riset/rng.hpp"
#include "riset/sparsity.hpp"

namespace riset::testing {

inline Graph random_graph(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) g.add_edge(u, v);
    return g;
}

inline RootedForest random_tree(SplitMix64& rng, int n) {
    std::vector<std::optional<int>> parent(n);
    for (int v = 1; v < n; ++v) parent[v] = static_cast<int>(rng.below(v));
    return RootedForest::from_parents(std::move(parent));
}

// Random subgraph of the closure of f, over the same universe.
inline Graph random_closure_subgraph(SplitMix64& rng, const RootedForest& f,
                                     std::uint64_t num, std::uint64_t den) {
    Graph cl = closure(f);
    Graph g(cl.vertex_count());
    for (const auto& [u, v] : cl.edges())
        if (rng.chance(num, den)) g.add_edge(u, v);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

constexpr int kFar = 1 << 28;

inline std::vector<std::vector<int>> fw_distances(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], std::min(kFar, d[i][k] + d[k][j]));
    return d;
}

namespace detail {

inline std::vector<std::vector<int>> subset_components(const Graph& g,
                                                       const std::vector<int>& verts) {
    std::vector<std::vector<int>> comps;
    std::vector<int> pending = verts;
    while (!pending.empty()) {
        std::vector<int> comp{pending.front()};
        std::vector<int> stack{pending.front()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (std::find(pending.begin(), pending.end(), w) == pending.end()) continue;
                if (std::find(comp.begin(), comp.end(), w) != comp.end()) continue;
                comp.push_back(w);
                stack.push_back(w);
            }
        }
        std::vector<int> rest;
        for (int v : pending)
            if (std::find(comp.begin(), comp.end(), v) == comp.end()) rest.push_back(v);
        pending = std::move(rest);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

// Pure recursive tree-depth, no memoization; intended for |verts| <= 7.
inline int td_oracle_on(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return 0;
    auto comps = detail::subset_components(g, verts);
    if (comps.size() > 1) {
        int best = 0;
        for (const auto& c : comps) best = std::max(best, td_oracle_on(g, c));
        return best;
    }
    int best = static_cast<int>(verts.size());
    for (int v : verts) {
        std::vector<int> rest;
        for (int w : verts)
            if (w != v) rest.push_back(w);
        best = std::min(best, 1 + td_oracle_on(g, rest));
    }
    return best;
}

inline int td_oracle(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return td_oracle_on(g, all);
}

namespace detail {

inline void wreach_dfs(const Graph& g, const LinearOrder& order, int r,
                       std::vector<int>& path, std::vector<bool>& on_path,
                       std::vector<bool>& hit) {
    int v = path.back();
    int last = path.back();
    // last vertex is weakly reached when it is the order-minimum of the path
    bool minimal = true;
    for (int w : path)
        if (order.rank_of(w) < order.rank_of(last)) minimal = false;
    if (minimal) hit[last] = true;
    if (static_cast<int>(path.size()) > r) return;
    for (int w : g.neighbors(v)) {
        if (on_path[w]) continue;
        path.push_back(w);
        on_path[w] = true;
        wreach_dfs(g, order, r, path, on_path, hit);
        on_path[w] = false;
        path.pop_back();
    }
}

}  // namespace detail

// Weak reachability by enumerating every simple path of length <= r.
inline std::vector<int> wreach_paths_oracle(const Graph& g, const LinearOrder& order,
                                            int v, int r) {
    std::vector<bool> hit(g.vertex_count(), false), on_path(g.vertex_count(), false);
    std::vector<int> path{v};
    on_path[v] = true;
    detail::wreach_dfs(g, order, r, path, on_path, hit);
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (hit[u]) out.push_back(u);
    return out;
}

// Exact weak coloring number by full order enumeration with the path-based
// reachability above; independent of the library's BFS formulation.
inline int wcol_oracle(const Graph& g, int r) {
    int n = g.vertex_count();
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    int best = n + 1;
    do {
        LinearOrder order = LinearOrder::from_sequence(seq);
        int worst = 0;
        for (int v = 0; v < n; ++v)
            worst = std::max(worst,
                             static_cast<int>(wreach_paths_oracle(g, order, v, r).size()));
        best = std::min(best, worst);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return n == 0 ? 0 : best;
}

namespace detail {

inline bool rainbow_from(const Graph& host, const IndependentFamily& fam,
                         std::vector<int>& chosen_idx, std::vector<int>& chosen_v,
                         int start) {
    int n = fam.set_size;
    if (static_cast<int>(chosen_v.size()) == n) return true;
    for (int i = start; i < fam.size(); ++i)
        for (int v : fam.sets[i]) {
            bool ok = std::find(chosen_v.begin(), chosen_v.end(), v) == chosen_v.end();
            for (int w : chosen_v)
                if (host.has_edge(v, w)) ok = false;
            if (!ok) continue;
            chosen_idx.push_back(i);
            chosen_v.push_back(v);
            if (rainbow_from(host, fam, chosen_idx, chosen_v, i + 1)) return true;
            chosen_idx.pop_back();
            chosen_v.pop_back();
        }
    return false;
}

}  // namespace detail

// Naive rainbow existence by enumerating index subsets and vertex choices.
inline bool naive_rainbow_exists(const Graph& host, const IndependentFamily& fam) {
    std::vector<int> idx, verts;
    return detail::rainbow_from(host, fam, idx, verts, 0);
}

// Uniform with-replacement sample from the independent n-sets of host.
inline IndependentFamily random_family(SplitMix64& rng, const Graph& host, int n,
                                       int count) {
    auto candidates = independent_n_sets(host, n);
    IndependentFamily fam;
    fam.set_size = n;
    for (int i = 0; i < count && !candidates.empty(); ++i)
        fam.sets.push_back(candidates[rng.below(candidates.size())]);
    return fam;
}

// Every induced matching of size n, by brute force over edge combinations.
inline std::vector<std::vector<Edge>> induced_matchings_of_size(const Graph& g, int n) {
    std::vector<Edge> all = g.edges();
    std::vector<std::vector<Edge>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            std::vector<Edge> m;
            for (int i : pick) m.push_back(all[i]);
            out.push_back(std::move(m));
            return;
        }
        for (int i = start; i < static_cast<int>(all.size()); ++i) {
            bool ok = true;
            for (int j : pick) {
                const auto& [a, b] = all[j];
                const auto& [c, d] = all[i];
                if (a == c || a == d || b == c || b == d) ok = false;
                if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) ||
                    g.has_edge(b, d))
                    ok = false;
            }
            if (!ok) continue;
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace riset::testing
