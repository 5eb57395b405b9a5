#include "riset/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "riset/forest.hpp"

namespace riset {

LinearOrder LinearOrder::from_ranks(std::vector<int> ranks) {
    int n = static_cast<int>(ranks.size());
    std::vector<bool> seen(n, false);
    for (int r : ranks) {
        if (r < 0 || r >= n || seen[r])
            throw std::invalid_argument("ranks must be a bijection onto 0..n-1");
        seen[r] = true;
    }
    LinearOrder o;
    o.rank_ = std::move(ranks);
    return o;
}

LinearOrder LinearOrder::from_sequence(const std::vector<int>& sequence) {
    int n = static_cast<int>(sequence.size());
    std::vector<int> ranks(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = sequence[i];
        if (v < 0 || v >= n || ranks[v] != -1)
            throw std::invalid_argument("sequence must list each vertex exactly once");
        ranks[v] = i;
    }
    LinearOrder o;
    o.rank_ = std::move(ranks);
    return o;
}

LinearOrder LinearOrder::identity(int n) {
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    LinearOrder o;
    o.rank_ = std::move(ranks);
    return o;
}

int LinearOrder::rank_of(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return rank_[v];
}

std::vector<int> LinearOrder::sequence() const {
    std::vector<int> seq(rank_.size());
    for (int v = 0; v < vertex_count(); ++v) seq[rank_[v]] = v;
    return seq;
}

void ColorAssignment::validate() const {
    if (palette_size < 1) throw std::invalid_argument("palette_size must be positive");
    for (int c : color)
        if (c < 0 || c >= palette_size)
            throw std::invalid_argument("color id outside palette");
}

std::vector<std::vector<int>> ColorAssignment::classes() const {
    std::vector<std::vector<int>> out(palette_size);
    for (int v = 0; v < vertex_count(); ++v) out[color[v]].push_back(v);
    return out;
}

std::vector<int> ColorAssignment::colors_used(const std::vector<int>& verts) const {
    std::vector<int> used;
    for (int v : verts) {
        if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
        used.push_back(color[v]);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

namespace {

void check_order(const Graph& g, const LinearOrder& order) {
    if (order.vertex_count() != g.vertex_count())
        throw std::invalid_argument("order does not cover the graph's vertices");
}

// BFS from u through vertices ranked above u only; every vertex within
// distance r weakly reaches u. Appends u to their sets.
void mark_reachers(const Graph& g, const std::vector<int>& rank, int u, int r,
                   std::vector<std::vector<int>>& out, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    out[u].push_back(u);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        if (dist[w] == r) continue;
        for (int nb : g.neighbors(w)) {
            if (dist[nb] != -1 || rank[nb] < rank[u]) continue;
            dist[nb] = dist[w] + 1;
            out[nb].push_back(u);
            q.push(nb);
        }
    }
}

}  // namespace

std::vector<std::vector<int>> wreach_all(const Graph& g, const LinearOrder& order, int r) {
    check_order(g, order);
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    int n = g.vertex_count();
    std::vector<std::vector<int>> out(n);
    std::vector<int> dist(n);
    for (int u = 0; u < n; ++u) mark_reachers(g, order.ranks(), u, r, out, dist);
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

std::vector<int> wreach(const Graph& g, const LinearOrder& order, int v, int r) {
    g.check_vertex(v);
    return wreach_all(g, order, r)[v];
}

int wcol_under_order(const Graph& g, const LinearOrder& order, int r) {
    check_order(g, order);
    if (g.vertex_count() == 0) return 0;
    int best = 0;
    for (const auto& s : wreach_all(g, order, r)) best = std::max(best, static_cast<int>(s.size()));
    return best;
}

namespace {

constexpr int kWcolExactCap = 9;

LinearOrder heuristic_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), ranks(n, -1);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    // Min-degree vertices are placed late: their weak reach stays small.
    for (int slot = n - 1; slot >= 0; --slot) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        gone[pick] = true;
        ranks[pick] = slot;
        for (int nb : g.neighbors(pick))
            if (!gone[nb]) --deg[nb];
    }
    return LinearOrder::from_ranks(std::move(ranks));
}

}  // namespace

WcolResult wcol(const Graph& g, int r, WcolMode mode) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    int n = g.vertex_count();
    if (n == 0) return {0, LinearOrder::identity(0)};
    if (mode == WcolMode::Heuristic) {
        LinearOrder order = heuristic_order(g);
        int value = wcol_under_order(g, order, r);
        return {value, std::move(order)};
    }
    if (n > kWcolExactCap)
        throw cap_exceeded("exact wcol needs at most " + std::to_string(kWcolExactCap) +
                           " vertices, got " + std::to_string(n));
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    int best = std::numeric_limits<int>::max();
    LinearOrder witness = LinearOrder::identity(n);
    // Sequences visit lexicographic order, so the first optimum seen is the
    // lexicographically least optimal order.
    do {
        LinearOrder order = LinearOrder::from_sequence(seq);
        int value = wcol_under_order(g, order, r);
        if (value < best) {
            best = value;
            witness = std::move(order);
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return {best, std::move(witness)};
}

ColorAssignment low_treedepth_coloring(const Graph& g, int p, int treedepth_cap) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    TreedepthResult td = treedepth_exact(g, treedepth_cap);
    ColorAssignment out;
    out.color.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.color[v] = td.forest.depth(v);
    out.palette_size = std::max(1, td.depth);
    return out;
}

LtdReport verify_ltd(const Graph& g, const ColorAssignment& coloring, int p,
                     LtdBound bound_mode, int treedepth_cap) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (coloring.vertex_count() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the graph's vertices");
    coloring.validate();
    auto classes = coloring.classes();
    int k = coloring.palette_size;
    LtdReport report;
    // Subsets of classes by increasing size, each size in lexicographic order.
    std::vector<int> chosen;
    auto bound_for = [&](int i) {
        return bound_mode == LtdBound::ClassCount ? i : i - 1;
    };
    std::vector<int> verts;
    auto check_current = [&]() {
        verts.clear();
        for (int c : chosen)
            verts.insert(verts.end(), classes[c].begin(), classes[c].end());
        std::sort(verts.begin(), verts.end());
        Graph sub = induced_subgraph(g, verts);
        int depth = treedepth_exact(sub, treedepth_cap).depth;
        ++report.unions_checked;
        int allowed = bound_for(static_cast<int>(chosen.size()));
        if (depth > allowed) {
            report.passed = false;
            report.violating_classes = chosen;
            report.measured_depth = depth;
            report.allowed_depth = allowed;
            return false;
        }
        return true;
    };
    // Depth-first combination walk: chosen always increasing.
    auto walk = [&](auto&& self, int from, int remaining) -> bool {
        if (remaining == 0) return check_current();
        for (int c = from; c <= k - remaining; ++c) {
            chosen.push_back(c);
            bool ok = self(self, c + 1, remaining - 1);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int i = 1; i <= std::min(p, k); ++i)
        if (!walk(walk, 0, i)) break;
    return report;
}

std::vector<int> shortest_path_closure(const Graph& g, const std::vector<int>& x, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    for (int v : x) g.check_vertex(v);
    std::vector<int> out = x;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (r == 1) return out;
    std::vector<int> members = out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        int u = members[i];
        auto dist = distances_from(g, u);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int v = members[j];
            if (!dist[v] || *dist[v] > r) continue;
            // Walk back from v picking the least-id neighbor one step closer
            // to u; this is the fixed tie-break for reproducible closures.
            int w = v;
            while (w != u) {
                int step = -1;
                for (int nb : g.neighbors(w))
                    if (dist[nb] && *dist[nb] == *dist[w] - 1) {
                        step = nb;
                        break;
                    }
                w = step;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool realizes_close_distances(const Graph& g, const std::vector<int>& subset,
                              const std::vector<int>& inner, int r) {
    Graph sub = induced_subgraph(g, subset);
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
    for (int v : inner)
        if (v < 0 || v >= g.vertex_count() || pos[v] == -1)
            throw std::invalid_argument("inner vertex not contained in subset");
    for (std::size_t i = 0; i < inner.size(); ++i) {
        auto dg = distances_from(g, inner[i]);
        auto ds = distances_from(sub, pos[inner[i]]);
        for (std::size_t j = i + 1; j < inner.size(); ++j) {
            int v = inner[j];
            if (!dg[v] || *dg[v] > r) continue;
            if (!ds[pos[v]] || *ds[pos[v]] != *dg[v]) return false;
        }
    }
    return true;
}

ColorAssignment excellent_refinement(const Graph& g, const ColorAssignment& c, int r,
                                     const LinearOrder& order) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the graph's vertices");
    c.validate();
    check_order(g, order);
    int n = g.vertex_count();
    auto reach = wreach_all(g, order, r);
    // Profile: c-colors of the weak reach listed by rank, plus where v sits.
    using Profile = std::pair<std::vector<int>, int>;
    std::vector<Profile> profile(n);
    for (int v = 0; v < n; ++v) {
        auto& set = reach[v];
        std::sort(set.begin(), set.end(),
                  [&](int a, int b) { return order.rank_of(a) < order.rank_of(b); });
        std::vector<int> cols;
        int pos = -1;
        for (std::size_t i = 0; i < set.size(); ++i) {
            cols.push_back(c.color[set[i]]);
            if (set[i] == v) pos = static_cast<int>(i);
        }
        profile[v] = {std::move(cols), pos};
    }
    std::map<Profile, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(profile[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    ColorAssignment out;
    out.color.resize(n);
    for (int v = 0; v < n; ++v) out.color[v] = ids[profile[v]];
    out.palette_size = std::max(1, next);
    return out;
}

AuditReport audit_excellence(const Graph& g, const ColorAssignment& c,
                             const ColorAssignment& refined, int r, std::int64_t d,
                             const std::vector<std::vector<int>>& sample_sets) {
    c.validate();
    refined.validate();
    AuditReport report;
    for (const auto& x : sample_sets) {
        ++report.samples;
        std::string tag = "sample " + std::to_string(report.samples - 1);
        auto closure_set = shortest_path_closure(g, x, r);
        if (!realizes_close_distances(g, closure_set, x, r)) {
            report.violations.push_back(tag + ": closure fails to realize a close pair");
            continue;
        }
        auto original = c.colors_used(closure_set);
        auto fine = refined.colors_used(x);
        auto budget = d * static_cast<std::int64_t>(fine.size());
        if (static_cast<std::int64_t>(original.size()) > budget)
            report.violations.push_back(tag + ": closure uses " +
                                        std::to_string(original.size()) +
                                        " colors, budget " + std::to_string(budget));
    }
    report.failures = static_cast<int>(report.violations.size());
    report.passed = report.failures == 0;
    return report;
}

std::int64_t excellence_budget(const Graph& g, int r, WcolMode mode) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    std::int64_t d = 1;
    for (int level = 2; level <= r; ++level) {
        std::int64_t factor = 2 * static_cast<std::int64_t>(wcol(g, level, mode).value);
        if (factor > 0 && d > std::numeric_limits<std::int64_t>::max() / factor)
            throw std::overflow_error("excellence budget exceeds 64-bit range");
        d *= std::max<std::int64_t>(factor, 1);
    }
    return d;
}

}  // namespace riset
