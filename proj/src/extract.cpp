#include "riset/extract.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "riset/oracle.hpp"

namespace riset {
namespace {

struct SplitWalk {
    int t = 0;                // split level; height(f) when no node splits
    std::vector<int> spine;   // root..split node, or the descent path
    int split_node = -1;      // -1 when no node splits
};

// Walks from the root through the unique populated child until a node with
// two or more populated child subtrees appears. `used` flags the family's
// vertices.
SplitWalk split_walk(const RootedForest& f, const std::vector<bool>& used, int height_d) {
    auto kids = f.children();
    int n = f.size();
    std::vector<int> by_depth(n);
    for (int v = 0; v < n; ++v) by_depth[v] = v;
    std::sort(by_depth.begin(), by_depth.end(),
              [&](int a, int b) { return f.depth(a) > f.depth(b); });
    std::vector<bool> populated = used;
    for (int v : by_depth)
        for (int c : kids[v])
            if (populated[c]) populated[v] = true;

    SplitWalk walk;
    int node = f.roots().at(0);
    walk.spine.push_back(node);
    for (;;) {
        std::vector<int> meet;
        for (int c : kids[node])
            if (populated[c]) meet.push_back(c);
        if (meet.size() >= 2) {
            walk.t = static_cast<int>(walk.spine.size());
            walk.split_node = node;
            return walk;
        }
        if (meet.empty()) {
            walk.t = height_d;
            return walk;
        }
        node = meet[0];
        walk.spine.push_back(node);
    }
}

std::vector<bool> family_flags(int universe, const std::vector<std::vector<int>>& sets) {
    std::vector<bool> used(universe, false);
    for (const auto& s : sets)
        for (int v : s) {
            if (v < 0 || v >= universe)
                throw std::invalid_argument("family vertex outside the tree's universe");
            used[v] = true;
        }
    return used;
}

// One family member inside the recursion, remembering its original index.
struct Member {
    int orig;
    std::vector<int> verts;
};

class TdExtractor {
public:
    TdExtractor(const Graph& g, const Graph& host, const RootedForest& f, int r)
        : g_(g), host_(host), f_(f), r_(r), d_(height(f)) {}

    ExtractOutcome run(std::vector<Member> mem, int depth);

private:
    const Graph& g_;
    const Graph& host_;
    const RootedForest& f_;
    int r_;
    int d_;

    ExtractOutcome flat_base(const std::vector<Member>& mem, int n, int depth);
};

// All members confined to one root-to-leaf path: the power graph there has
// small chromatic number and exhaustive search is cheap, so it answers
// exactly instead of mirroring a separate inductive argument.
ExtractOutcome TdExtractor::flat_base(const std::vector<Member>& mem, int n, int depth) {
    IndependentFamily sub;
    sub.set_size = n;
    for (const auto& m : mem) sub.sets.push_back(m.verts);
    auto found = find_rainbow_bruteforce(host_, sub);
    if (!found)
        return FailureReport{"base-oracle", depth, static_cast<int>(mem.size()),
                             "no rainbow among sets confined to one root-to-leaf path"};
    for (auto& p : found->picks) p.set_index = mem[p.set_index].orig;
    return *found;
}

ExtractOutcome TdExtractor::run(std::vector<Member> mem, int depth) {
    if (mem.empty()) return FailureReport{"family", depth, 0, "no family members remain"};
    int n = static_cast<int>(mem[0].verts.size());
    if (n == 1) return RainbowSelection{{{mem[0].verts[0], mem[0].orig}}};

    std::vector<bool> used(g_.vertex_count(), false);
    for (const auto& m : mem)
        for (int v : m.verts) used[v] = true;
    SplitWalk walk = split_walk(f_, used, d_);
    if (walk.split_node == -1) return flat_base(mem, n, depth);

    int q = walk.t;
    const std::vector<int>& spine = walk.spine;
    int u = walk.split_node;
    auto kids = f_.children();

    // Subtree index per vertex for the subtrees hanging below the split node.
    std::vector<int> subtree(g_.vertex_count(), -1);
    const std::vector<int>& subroots = kids[u];
    int h = static_cast<int>(subroots.size());
    for (int i = 0; i < h; ++i) {
        std::vector<int> stack{subroots[i]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            subtree[v] = i;
            for (int c : kids[v]) stack.push_back(c);
        }
    }

    std::vector<bool> on_spine(g_.vertex_count(), false);
    for (int v : spine) on_spine[v] = true;
    // Minimality of the split level confines every member to the spine plus
    // the subtrees below the split node.
    for (const auto& m : mem)
        for (int v : m.verts)
            if (!on_spine[v] && subtree[v] == -1)
                throw std::logic_error("family vertex escapes the split subtrees");

    // Distance vectors to the spine, capped at r+1.
    std::vector<std::vector<int>> dv(g_.vertex_count(), std::vector<int>(q));
    for (int i = 0; i < q; ++i) {
        auto dist = distances_from(g_, spine[i]);
        for (int v = 0; v < g_.vertex_count(); ++v)
            dv[v][i] = (dist[v] && *dist[v] <= r_) ? *dist[v] : r_ + 1;
    }

    // Cells = distance vectors realized by family vertices, in sorted order.
    std::map<std::vector<int>, int> cell_id;
    for (const auto& m : mem)
        for (int v : m.verts) cell_id.emplace(dv[v], 0);
    {
        int next = 0;
        for (auto& [key, id] : cell_id) id = next++;
    }
    std::vector<const std::vector<int>*> cell_key(cell_id.size());
    for (const auto& [key, id] : cell_id) cell_key[id] = &key;
    std::vector<int> vcell(g_.vertex_count(), -1);
    for (int v = 0; v < g_.vertex_count(); ++v) {
        auto it = cell_id.find(dv[v]);
        if (it != cell_id.end()) vcell[v] = it->second;
    }

    // Keep the largest bucket of members agreeing on which cells they meet;
    // ties go to the least signature. Within the bucket, every cell is met
    // by either all members or none.
    std::map<std::vector<int>, std::vector<int>> sig_buckets;
    for (int i = 0; i < static_cast<int>(mem.size()); ++i) {
        std::vector<int> sig;
        for (int v : mem[i].verts) sig.push_back(vcell[v]);
        std::sort(sig.begin(), sig.end());
        sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
        sig_buckets[sig].push_back(i);
    }
    std::vector<int> active;
    std::vector<int> i1;
    for (const auto& [sig, idxs] : sig_buckets)
        if (idxs.size() > i1.size()) {
            i1 = idxs;
            active = sig;
        }

    // One bipartite graph per active cell: subtrees vs retained members,
    // joined when the member meets the cell inside the subtree. A matching
    // of n pairs yields Case 1; otherwise the minimum covers accumulate.
    std::vector<char> cover_subtree(h, 0);
    std::vector<char> cover_member(i1.size(), 0);
    int case1_cell = -1;
    std::vector<std::pair<int, int>> case1_matching;
    for (int cid : active) {
        BipartiteGraph b;
        b.left_count = h;
        b.right_count = static_cast<int>(i1.size());
        std::set<std::pair<int, int>> seen;
        for (int pos = 0; pos < static_cast<int>(i1.size()); ++pos)
            for (int v : mem[i1[pos]].verts)
                if (vcell[v] == cid && subtree[v] >= 0 &&
                    seen.insert({subtree[v], pos}).second)
                    b.edges.emplace_back(subtree[v], pos);
        MatchingCover mc = bipartite_matching_and_cover(b);
        if (static_cast<int>(mc.matching.size()) >= n) {
            case1_cell = cid;
            case1_matching = std::move(mc.matching);
            break;
        }
        for (int l : mc.left_cover) cover_subtree[l] = 1;
        for (int rt : mc.right_cover) cover_member[rt] = 1;
    }

    if (case1_cell != -1) {
        const std::vector<int>& a = *cell_key[case1_cell];
        case1_matching.resize(n);  // pairs arrive sorted by subtree index
        std::vector<std::pair<int, int>> chosen;  // (vertex, position in mem)
        for (const auto& [l, rt] : case1_matching) {
            int x = -1;
            for (int v : mem[i1[rt]].verts)
                if (vcell[v] == case1_cell && subtree[v] == l) {
                    x = v;
                    break;
                }
            if (x == -1) throw std::logic_error("matched member misses its cell");
            chosen.emplace_back(x, i1[rt]);
        }
        bool clique_cell = false;
        for (int e : a)
            if (2 * e <= r_) clique_cell = true;
        if (!clique_cell) {
            // All chosen vertices sit in distinct subtrees with pairwise
            // spine-distance sums above r, hence pairwise nonadjacent.
            RainbowSelection sel;
            for (const auto& [x, pos] : chosen) sel.picks.push_back({x, mem[pos].orig});
            return sel;
        }
        // Some spine vertex is within r/2 of the cell, making the cell a
        // clique in the power graph, so each member holds exactly one cell
        // vertex; strip it and extract a rainbow of size n-1.
        std::vector<int> cellverts;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (dv[v] == a) cellverts.push_back(v);
        for (std::size_t i = 0; i < cellverts.size(); ++i)
            for (std::size_t j = i + 1; j < cellverts.size(); ++j)
                if (!host_.has_edge(cellverts[i], cellverts[j]))
                    throw std::logic_error("cell expected to be a clique in the power graph");
        std::vector<char> matched_pos(mem.size(), 0);
        for (const auto& [l, rt] : case1_matching) matched_pos[i1[rt]] = 1;
        std::vector<Member> reduced;
        for (int pos : i1) {
            if (matched_pos[pos]) continue;
            std::vector<int> verts;
            int removed = 0;
            for (int v : mem[pos].verts) {
                if (vcell[v] == case1_cell)
                    ++removed;
                else
                    verts.push_back(v);
            }
            if (removed != 1)
                throw std::logic_error("retained member meets the clique cell " +
                                       std::to_string(removed) + " times");
            reduced.push_back({mem[pos].orig, std::move(verts)});
        }
        ExtractOutcome sub = run(std::move(reduced), depth + 1);
        if (std::holds_alternative<FailureReport>(sub)) return sub;
        RainbowSelection sel = std::get<RainbowSelection>(std::move(sub));
        // The n-1 picks meet at most n-1 subtrees; extend from an untouched
        // one. Cross-pairs are nonadjacent: the matched member also meets
        // each pick's cell, so the spine sums exceed r there.
        for (const auto& [l, rt] : case1_matching) {
            bool met = false;
            for (const auto& p : sel.picks)
                if (subtree[p.vertex] == l) {
                    met = true;
                    break;
                }
            if (met) continue;
            for (const auto& [x, pos] : chosen)
                if (pos == i1[rt]) {
                    sel.picks.push_back({x, mem[pos].orig});
                    return sel;
                }
        }
        throw std::logic_error("reduced rainbow meets every matched subtree");
    }

    // Case 2: no cell admits n disjoint (subtree, member) pairs.
    std::vector<int> uncovered;
    for (int pos = 0; pos < static_cast<int>(i1.size()); ++pos)
        if (!cover_member[pos]) uncovered.push_back(i1[pos]);
    if (uncovered.empty())
        return FailureReport{"cover", depth, static_cast<int>(mem.size()),
                             "every member of the retained bucket lies in a minimum cover"};
    std::vector<int> sh;
    for (int l = 0; l < h; ++l)
        if (cover_subtree[l]) sh.push_back(l);
    for (int pos : uncovered)
        for (int v : mem[pos].verts)
            if (!on_spine[v] && (subtree[v] < 0 || !cover_subtree[subtree[v]]))
                throw std::logic_error("uncovered member escapes the cover subtrees");

    // Equal-count pigeonhole over (covered subtree, cell) pairs.
    std::map<std::vector<int>, std::vector<int>> count_buckets;
    for (int pos : uncovered) {
        std::vector<int> key;
        for (int l : sh)
            for (int cid : active) {
                int cnt = 0;
                for (int v : mem[pos].verts)
                    if (subtree[v] == l && vcell[v] == cid) ++cnt;
                key.push_back(cnt);
            }
        count_buckets[key].push_back(pos);
    }
    std::vector<int> i2;
    std::vector<int> common_counts;
    for (const auto& [key, idxs] : count_buckets)
        if (idxs.size() > i2.size()) {
            i2 = idxs;
            common_counts = key;
        }

    std::vector<int> met;  // covered subtrees the bucket members intersect
    std::vector<int> met_total;
    for (std::size_t li = 0; li < sh.size(); ++li) {
        int total = 0;
        for (std::size_t ci = 0; ci < active.size(); ++ci)
            total += common_counts[li * active.size() + ci];
        if (total > 0) {
            met.push_back(sh[li]);
            met_total.push_back(total);
        }
    }

    if (met.size() <= 1) {
        // Members now live on the spine plus at most one subtree, so the
        // split moves strictly deeper; recurse on the equalized bucket.
        std::vector<Member> deeper;
        for (int pos : i2) deeper.push_back(mem[pos]);
        std::vector<bool> used2(g_.vertex_count(), false);
        for (const auto& m : deeper)
            for (int v : m.verts) used2[v] = true;
        SplitWalk walk2 = split_walk(f_, used2, d_);
        if (walk2.split_node != -1 && walk2.t <= q)
            throw std::logic_error("descent did not deepen the split");
        return run(std::move(deeper), depth + 1);
    }

    // Split: extract a rainbow of size y inside the lowest met subtree, then
    // one of size n-y outside it, from members not already used.
    int big_q = met[0];
    int y = met_total[0];
    if (y <= 0 || y >= n) throw std::logic_error("split subtree count out of range");
    std::vector<Member> inner;
    for (int pos : i2) {
        std::vector<int> in_q;
        for (int v : mem[pos].verts)
            if (subtree[v] == big_q) in_q.push_back(v);
        if (static_cast<int>(in_q.size()) != y)
            throw std::logic_error("unequal subtree counts after pigeonhole");
        inner.push_back({mem[pos].orig, std::move(in_q)});
    }
    ExtractOutcome first = run(std::move(inner), depth + 1);
    if (std::holds_alternative<FailureReport>(first)) return first;
    RainbowSelection r1 = std::get<RainbowSelection>(std::move(first));
    std::set<int> used_orig;
    for (const auto& p : r1.picks) used_orig.insert(p.set_index);
    std::vector<Member> outer;
    for (int pos : i2) {
        if (used_orig.count(mem[pos].orig)) continue;
        std::vector<int> out_q;
        for (int v : mem[pos].verts)
            if (subtree[v] != big_q) out_q.push_back(v);
        if (static_cast<int>(out_q.size()) != n - y)
            throw std::logic_error("unequal subtree counts after pigeonhole");
        outer.push_back({mem[pos].orig, std::move(out_q)});
    }
    ExtractOutcome second = run(std::move(outer), depth + 1);
    if (std::holds_alternative<FailureReport>(second)) return second;
    RainbowSelection r2 = std::get<RainbowSelection>(std::move(second));
    for (const auto& p : r2.picks) r1.picks.push_back(p);
    return r1;
}

void require_tree_over(const RootedForest& f, const IndependentFamily& fam) {
    if (!f.is_tree()) throw std::invalid_argument("forest must be a single rooted tree");
    family_flags(f.size(), fam.sets);
}

}  // namespace

int t_split_level(const RootedForest& f, const IndependentFamily& fam) {
    require_tree_over(f, fam);
    auto used = family_flags(f.size(), fam.sets);
    return split_walk(f, used, height(f)).t;
}

SpineContext build_spine_context(const Graph& g, const RootedForest& f, int r,
                                 const IndependentFamily& fam) {
    require_tree_over(f, fam);
    if (g.vertex_count() != f.size())
        throw std::invalid_argument("graph and tree have different universes");
    if (r < 1) throw std::invalid_argument("r must be positive");
    auto used = family_flags(f.size(), fam.sets);
    SplitWalk walk = split_walk(f, used, height(f));
    if (walk.split_node == -1)
        throw std::invalid_argument("family never splits; no spine context exists");
    return SpineContext{f, g, r, std::move(walk.spine)};
}

std::vector<DistanceVector> distance_vectors(const SpineContext& ctx) {
    int n = ctx.base_graph.vertex_count();
    std::vector<DistanceVector> out(n);
    for (auto& d : out) d.entries.resize(ctx.q());
    for (int i = 0; i < ctx.q(); ++i) {
        auto dist = distances_from(ctx.base_graph, ctx.spine[i]);
        for (int v = 0; v < n; ++v)
            out[v].entries[i] = (dist[v] && *dist[v] <= ctx.r) ? *dist[v] : ctx.r + 1;
    }
    return out;
}

DistanceVector distance_vector(const SpineContext& ctx, int v) {
    ctx.base_graph.check_vertex(v);
    return distance_vectors(ctx)[v];
}

ClaimVerdict claim_adjacency(const DistanceVector& a, const DistanceVector& b, int r,
                             bool cross_subtree) {
    if (a.entries.size() != b.entries.size())
        throw std::invalid_argument("distance vectors have different lengths");
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i] + b.entries[i] <= r) return ClaimVerdict::Adjacent;
    return cross_subtree ? ClaimVerdict::NonAdjacent : ClaimVerdict::Undetermined;
}

MatchingCover bipartite_matching_and_cover(const BipartiteGraph& b) {
    if (b.left_count < 0 || b.right_count < 0)
        throw std::invalid_argument("negative side size");
    std::vector<std::vector<int>> adj(b.left_count);
    for (const auto& [l, rt] : b.edges) {
        if (l < 0 || l >= b.left_count || rt < 0 || rt >= b.right_count)
            throw std::invalid_argument("edge endpoint outside its side");
        adj[l].push_back(rt);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<int> match_l(b.left_count, -1), match_r(b.right_count, -1);
    std::vector<char> vis(b.right_count);
    auto augment = [&](auto&& self, int l) -> bool {
        for (int rt : adj[l]) {
            if (vis[rt]) continue;
            vis[rt] = 1;
            if (match_r[rt] == -1 || self(self, match_r[rt])) {
                match_r[rt] = l;
                match_l[l] = rt;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < b.left_count; ++l) {
        std::fill(vis.begin(), vis.end(), 0);
        augment(augment, l);
    }
    MatchingCover out;
    for (int l = 0; l < b.left_count; ++l)
        if (match_l[l] != -1) out.matching.emplace_back(l, match_l[l]);
    // Alternating reachability from unmatched left vertices; the cover takes
    // unreached lefts and reached rights.
    std::vector<char> vis_l(b.left_count, 0), vis_r(b.right_count, 0);
    std::vector<int> stack;
    for (int l = 0; l < b.left_count; ++l)
        if (match_l[l] == -1) {
            vis_l[l] = 1;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int rt : adj[l]) {
            if (rt == match_l[l] || vis_r[rt]) continue;
            vis_r[rt] = 1;
            int nl = match_r[rt];
            if (nl != -1 && !vis_l[nl]) {
                vis_l[nl] = 1;
                stack.push_back(nl);
            }
        }
    }
    for (int l = 0; l < b.left_count; ++l)
        if (!vis_l[l]) out.left_cover.push_back(l);
    for (int rt = 0; rt < b.right_count; ++rt)
        if (vis_r[rt]) out.right_cover.push_back(rt);
    if (out.cover_size() != static_cast<int>(out.matching.size()))
        throw std::logic_error("cover size differs from matching size");
    for (const auto& [l, rt] : b.edges)
        if (vis_l[l] && !vis_r[rt]) throw std::logic_error("cover misses an edge");
    return out;
}

ExtractOutcome extract_treedepth(const Graph& g, const RootedForest& f, int r,
                                 const IndependentFamily& fam) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (!f.is_tree()) throw std::invalid_argument("forest must be a single rooted tree");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("graph and tree have different universes");
    if (!embeds_in_closure(g, f))
        throw std::invalid_argument("graph is not a subgraph of the tree's closure");
    Graph host = power(g, r);
    make_family(host, fam.set_size, fam.sets);
    TdExtractor ex(g, host, f, r);
    std::vector<Member> mem;
    for (int i = 0; i < fam.size(); ++i) mem.push_back({i, fam.sets[i]});
    ExtractOutcome out = ex.run(std::move(mem), 0);
    if (auto* sel = std::get_if<RainbowSelection>(&out)) {
        std::sort(sel->picks.begin(), sel->picks.end(),
                  [](const RainbowPick& a, const RainbowPick& b) {
                      return a.set_index < b.set_index;
                  });
        std::string err = selection_error(host, fam, *sel);
        if (!err.empty())
            throw std::logic_error("extraction produced an invalid selection: " + err);
    }
    return out;
}

ExtractOutcome extract_treedepth_graph(const Graph& g, int r, const IndependentFamily& fam,
                                       int treedepth_cap) {
    TreedepthResult td = treedepth_exact(g, treedepth_cap);
    RootedForest f = attach_root(td.forest);
    Graph gx(g.vertex_count() + 1);
    for (const auto& [a, b] : g.edges()) gx.add_edge(a, b);
    return extract_treedepth(gx, f, r, fam);
}

ExtractOutcome extract_bounded_expansion(const Graph& g, int r, int n,
                                         const IndependentFamily& fam,
                                         const BePipelineOptions& opts) {
    if (r < 1 || n < 1) throw std::invalid_argument("r and n must be positive");
    if (fam.set_size != n)
        throw std::invalid_argument("family set size does not match n");
    Graph host = power(g, r);
    make_family(host, n, fam.sets);
    if (fam.sets.empty()) return FailureReport{"pigeonhole", 0, 0, "empty family"};

    std::int64_t dr = excellence_budget(g, r, opts.wcol_mode);
    long long coloring_param = 1;
    if (dr >= INT_MAX / n)
        coloring_param = INT_MAX;
    else
        coloring_param = dr * n;
    ColorAssignment base_colors =
        low_treedepth_coloring(g, static_cast<int>(coloring_param), opts.treedepth_cap);
    LinearOrder order = wcol(g, r, opts.wcol_mode).witness;
    ColorAssignment refined = excellent_refinement(g, base_colors, r, order);

    // Pigeonhole the family onto n refined classes: each member names the
    // classes it touches, padded with the smallest absent colors; the bundle
    // covering the most members wins, ties to the least bundle.
    std::vector<int> bundle;
    std::vector<int> covered;
    if (refined.palette_size <= n) {
        bundle.resize(refined.palette_size);
        for (int c = 0; c < refined.palette_size; ++c) bundle[c] = c;
        for (int i = 0; i < fam.size(); ++i) covered.push_back(i);
    } else {
        std::vector<std::vector<int>> member_colors(fam.size());
        std::map<std::vector<int>, int> candidates;
        for (int i = 0; i < fam.size(); ++i) {
            member_colors[i] = refined.colors_used(fam.sets[i]);
            std::vector<int> padded = member_colors[i];
            for (int c = 0; static_cast<int>(padded.size()) < n; ++c)
                if (!std::binary_search(member_colors[i].begin(), member_colors[i].end(), c))
                    padded.push_back(c);
            std::sort(padded.begin(), padded.end());
            candidates.emplace(std::move(padded), 0);
        }
        std::size_t best_cover = 0;
        for (auto& [cand, count] : candidates) {
            std::vector<int> hits;
            for (int i = 0; i < fam.size(); ++i)
                if (std::includes(cand.begin(), cand.end(), member_colors[i].begin(),
                                  member_colors[i].end()))
                    hits.push_back(i);
            if (hits.size() > best_cover) {
                best_cover = hits.size();
                bundle = cand;
                covered = std::move(hits);
            }
        }
    }
    if (static_cast<int>(covered.size()) < opts.min_subfamily)
        return FailureReport{
            "pigeonhole", 0, static_cast<int>(covered.size()),
            "largest class bundle keeps " + std::to_string(covered.size()) +
                " members, required " + std::to_string(opts.min_subfamily)};

    std::vector<int> x_union;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::binary_search(bundle.begin(), bundle.end(), refined.color[v]))
            x_union.push_back(v);
    std::vector<int> closed = shortest_path_closure(g, x_union, r);

    // The closure must preserve power-adjacency on the class union; a
    // mismatch means the realized paths are wrong, not that the input is
    // undersized.
    Graph closed_sub = induced_subgraph(g, closed);
    Graph closed_pow = power(closed_sub, r);
    std::vector<int> pos_in_closed(g.vertex_count(), -1);
    for (std::size_t i = 0; i < closed.size(); ++i)
        pos_in_closed[closed[i]] = static_cast<int>(i);
    std::vector<int> x_pos;
    for (int v : x_union) x_pos.push_back(pos_in_closed[v]);
    Graph direct = induced_subgraph(host, x_union);
    Graph via_closure = induced_subgraph(closed_pow, x_pos);
    if (!(direct == via_closure))
        throw std::logic_error("closure changed power adjacency on the class union");

    IndependentFamily reduced;
    reduced.set_size = n;
    for (int i : covered) {
        std::vector<int> mapped;
        for (int v : fam.sets[i]) mapped.push_back(pos_in_closed[v]);
        reduced.sets.push_back(std::move(mapped));
    }
    ExtractOutcome out = extract_treedepth_graph(closed_sub, r, reduced, opts.treedepth_cap);
    if (auto* rep = std::get_if<FailureReport>(&out)) return *rep;
    RainbowSelection sel = std::get<RainbowSelection>(std::move(out));
    for (auto& p : sel.picks) {
        p.vertex = closed[p.vertex];
        p.set_index = covered[p.set_index];
    }
    std::sort(sel.picks.begin(), sel.picks.end(),
              [](const RainbowPick& a, const RainbowPick& b) {
                  return a.set_index < b.set_index;
              });
    std::string err = selection_error(host, fam, sel);
    if (!err.empty())
        throw std::logic_error("pipeline produced an invalid selection: " + err);
    return sel;
}

std::string induced_matching_error(const Graph& g, const std::vector<Edge>& m, int n) {
    if (static_cast<int>(m.size()) != n)
        return "expected " + std::to_string(n) + " edges, got " + std::to_string(m.size());
    std::vector<int> ends;
    for (const auto& [a, b] : m) {
        if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count())
            return "edge endpoint out of range";
        if (!g.has_edge(a, b))
            return "pair (" + std::to_string(a) + "," + std::to_string(b) +
                   ") is not an edge";
        ends.push_back(a);
        ends.push_back(b);
    }
    std::vector<int> sorted_ends = ends;
    std::sort(sorted_ends.begin(), sorted_ends.end());
    if (std::adjacent_find(sorted_ends.begin(), sorted_ends.end()) != sorted_ends.end())
        return "edges share an endpoint";
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            if (i / 2 == j / 2) continue;
            if (g.has_edge(ends[i], ends[j]))
                return "edge between (" + std::to_string(ends[i]) + "," +
                       std::to_string(ends[j]) + ") breaks inducedness";
        }
    return "";
}

bool pairwise_distance_at_least(const Graph& g, const std::vector<int>& verts, int k) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto dist = distances_from(g, verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (dist[verts[j]] && *dist[verts[j]] < k) return false;
    }
    return true;
}

MatchingOutcome rainbow_induced_matching(const Graph& g, int n,
                                         const std::vector<std::vector<Edge>>& matchings,
                                         int treedepth_cap) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    for (std::size_t i = 0; i < matchings.size(); ++i) {
        std::string err = induced_matching_error(g, matchings[i], n);
        if (!err.empty())
            throw std::invalid_argument("matching " + std::to_string(i) + ": " + err);
    }
    Subdivision sub = subdivide_once(g);
    std::map<int, Edge> edge_of;
    for (const auto& [e, v] : sub.edge_vertex) edge_of[v] = e;
    IndependentFamily fam;
    fam.set_size = n;
    for (const auto& m : matchings) {
        std::vector<int> verts;
        for (const auto& e : m) verts.push_back(sub.vertex_for(e));
        std::sort(verts.begin(), verts.end());
        fam.sets.push_back(std::move(verts));
    }

    ExtractOutcome out;
    if (sub.graph.vertex_count() <= treedepth_cap) {
        out = extract_treedepth_graph(sub.graph, 5, fam, treedepth_cap);
    } else {
        // Subdivisions outgrow the exact solver quickly; a DFS tree still
        // embeds the graph in its closure, trading height for tractability.
        RootedForest f = attach_root(dfs_forest(sub.graph));
        Graph gx(sub.graph.vertex_count() + 1);
        for (const auto& [a, b] : sub.graph.edges()) gx.add_edge(a, b);
        out = extract_treedepth(gx, f, 5, fam);
    }
    if (auto* rep = std::get_if<FailureReport>(&out)) return *rep;
    RainbowSelection sel = std::get<RainbowSelection>(std::move(out));
    MatchingSelection result;
    std::vector<Edge> picked_edges;
    for (const auto& p : sel.picks) {
        auto it = edge_of.find(p.vertex);
        if (it == edge_of.end())
            throw std::logic_error("pick is not a subdivision vertex");
        bool from_source = false;
        for (Edge e : matchings[p.set_index]) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e == it->second) from_source = true;
        }
        if (!from_source)
            throw std::logic_error("picked edge missing from its source matching");
        result.picks.emplace_back(it->second, p.set_index);
        picked_edges.push_back(it->second);
    }
    std::string err = induced_matching_error(g, picked_edges, n);
    if (!err.empty())
        throw std::logic_error("picked edges are not an induced matching: " + err);
    return result;
}

}  // namespace riset
