#include "riset/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "riset/rng.hpp"

namespace riset {
namespace {

struct RainbowSearch {
    const Graph& host;
    const IndependentFamily& fam;
    long nodes_left;
    std::vector<RainbowPick> picks;
    std::vector<bool> vertex_used;

    bool viable(int v) const {
        if (vertex_used[v]) return false;
        for (const auto& p : picks)
            if (host.has_edge(p.vertex, v)) return false;
        return true;
    }

    // Chooses member vertices for sets from `from` upward; set indices stay
    // increasing, which cuts the symmetric orderings of one injection.
    bool extend(int from) {
        if (static_cast<int>(picks.size()) == fam.set_size) return true;
        int need = fam.set_size - static_cast<int>(picks.size());
        for (int i = from; i <= fam.size() - need; ++i) {
            for (int v : fam.sets[i]) {
                if (--nodes_left < 0) throw cap_exceeded("rainbow search cap hit");
                if (!viable(v)) continue;
                picks.push_back({v, i});
                vertex_used[v] = true;
                if (extend(i + 1)) return true;
                vertex_used[v] = false;
                picks.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<RainbowSelection> find_rainbow_bruteforce(const Graph& host,
                                                        const IndependentFamily& fam,
                                                        long node_cap) {
    if (fam.set_size > fam.size()) return std::nullopt;
    RainbowSearch search{host, fam, node_cap, {}, std::vector<bool>(host.vertex_count(), false)};
    if (!search.extend(0)) return std::nullopt;
    return RainbowSelection{std::move(search.picks)};
}

std::vector<std::vector<int>> independent_n_sets(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto grow = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        int need = n - static_cast<int>(cur.size());
        for (int v = from; v <= g.vertex_count() - need; ++v) {
            bool ok = true;
            for (int u : cur)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

namespace {

struct BadFamilySearch {
    const Graph& g;
    int n;
    const std::vector<std::vector<int>>& candidates;
    long checks_left;
    std::vector<std::vector<int>> current;
    std::vector<std::vector<int>> best;

    // Rainbow-free families are closed downward (removing a member cannot
    // create a rainbow), so extensions of a family with a rainbow are never
    // explored. Candidates are scanned in lexicographic order; each may
    // repeat up to n-1 times.
    void extend(std::size_t from) {
        if (current.size() > best.size()) best = current;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            long remaining_capacity =
                static_cast<long>(candidates.size() - i) * (n - 1);
            if (static_cast<long>(current.size()) + remaining_capacity <=
                static_cast<long>(best.size()))
                return;
            std::size_t added = 0;
            for (int copy = 0; copy < n - 1; ++copy) {
                current.push_back(candidates[i]);
                ++added;
                if (--checks_left < 0) throw cap_exceeded("bad-family search cap hit");
                IndependentFamily fam{n, current};
                if (find_rainbow_bruteforce(g, fam).has_value()) break;
                extend(i + 1);
            }
            current.resize(current.size() - added);
        }
    }
};

}  // namespace

FExactResult f_exact(const Graph& g, int n, long node_cap) {
    auto candidates = independent_n_sets(g, n);
    FExactResult out;
    out.witness_bad_family.set_size = n;
    BadFamilySearch search{g, n, candidates, node_cap, {}, {}};
    try {
        search.extend(0);
    } catch (const cap_exceeded&) {
        // `best` only ever holds verified rainbow-free families; the family
        // being probed when the cap hit is not one of them.
        out.lower_bound = static_cast<int>(search.best.size()) + 1;
        out.witness_bad_family.sets = std::move(search.best);
        return out;
    }
    out.value = static_cast<int>(search.best.size()) + 1;
    out.lower_bound = *out.value;
    out.witness_bad_family.sets = std::move(search.best);
    return out;
}

WorstFamily worst_family_multipartite(int k, int part_size, int n, int multiplicity) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (part_size < n) throw std::invalid_argument("part_size must be at least n");
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    Graph host = make_complete_multipartite(std::vector<int>(k, part_size));
    std::vector<std::vector<int>> sets;
    for (int part = 0; part < k; ++part) {
        std::vector<int> s(n);
        for (int j = 0; j < n; ++j) s[j] = part * part_size + j;
        for (int copy = 0; copy < multiplicity; ++copy) sets.push_back(s);
    }
    IndependentFamily fam = make_family(host, n, std::move(sets));
    return {std::move(host), std::move(fam)};
}

ChromaticCheckReport check_chromatic_bound(const Graph& g, int n, int trials,
                                           std::uint64_t seed, int chromatic_cap) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    ChromaticCheckReport report;
    report.trials = trials;
    report.seed = seed;
    int chi = chromatic_number(g, chromatic_cap);
    report.bound = chi * (n - 1) + 1;
    auto candidates = independent_n_sets(g, n);
    if (candidates.empty()) {
        report.vacuous = true;
        report.passes = trials;
        return report;
    }
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, t));
        std::vector<std::vector<int>> sets;
        for (int i = 0; i < report.bound; ++i)
            sets.push_back(candidates[rng.below(candidates.size())]);
        IndependentFamily fam{n, std::move(sets)};
        if (find_rainbow_bruteforce(g, fam).has_value()) {
            ++report.passes;
        } else if (!report.counterexample) {
            report.counterexample = fam;
        }
    }
    return report;
}

}  // namespace riset
