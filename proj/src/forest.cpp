#include "riset/forest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace riset {

RootedForest::RootedForest(int singleton_roots) {
  if (singleton_roots < 0) throw std::invalid_argument("vertex count must be nonnegative");
  parent_.assign(singleton_roots, std::nullopt);
}

RootedForest RootedForest::from_parents(std::vector<std::optional<int>> parent) {
  int n = static_cast<int>(parent.size());
  for (int v = 0; v < n; ++v)
    if (parent[v] && (*parent[v] < 0 || *parent[v] >= n || *parent[v] == v))
      throw std::invalid_argument("invalid parent for vertex " + std::to_string(v));
  // every vertex must reach a root without revisiting
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  for (int v = 0; v < n; ++v) {
    int x = v;
    std::vector<int> trail;
    while (state[x] == 0) {
      state[x] = 1;
      trail.push_back(x);
      if (!parent[x]) break;
      x = *parent[x];
      if (state[x] == 1) throw std::invalid_argument("parent relation contains a cycle");
    }
    for (int t : trail) state[t] = 2;
  }
  RootedForest f;
  f.parent_ = std::move(parent);
  return f;
}

std::optional<int> RootedForest::parent(int v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("forest vertex out of range");
  return parent_[v];
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (!parent_[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> RootedForest::children() const {
  std::vector<std::vector<int>> ch(size());
  for (int v = 0; v < size(); ++v)
    if (parent_[v]) ch[*parent_[v]].push_back(v);
  return ch;
}

int RootedForest::depth(int v) const {
  int d = 0;
  while (parent(v)) {
    v = *parent_[v];
    ++d;
  }
  return d;
}

std::vector<int> RootedForest::ancestors(int v) const {
  std::vector<int> out;
  while (parent(v)) {
    v = *parent_[v];
    out.push_back(v);
  }
  return out;
}

bool RootedForest::is_ancestor(int a, int v) const {
  if (a < 0 || a >= size()) throw std::out_of_range("forest vertex out of range");
  while (parent(v)) {
    v = *parent_[v];
    if (v == a) return true;
  }
  return false;
}

Graph closure(const RootedForest& f) {
  Graph g(f.size());
  for (int v = 0; v < f.size(); ++v)
    for (int a : f.ancestors(v)) g.add_edge(v, a);
  return g;
}

int height(const RootedForest& f) {
  int h = 0;
  for (int v = 0; v < f.size(); ++v) h = std::max(h, f.depth(v) + 1);
  return h;
}

bool embeds_in_closure(const Graph& g, const RootedForest& f) {
  if (g.vertex_count() != f.size())
    throw std::invalid_argument("graph and forest must share a vertex universe");
  for (const Edge& e : g.edges())
    if (!f.is_ancestor(e.first, e.second) && !f.is_ancestor(e.second, e.first)) return false;
  return true;
}

RootedForest attach_root(const RootedForest& f) {
  std::vector<std::optional<int>> parent(f.size() + 1);
  int root = f.size();
  for (int v = 0; v < f.size(); ++v) parent[v] = f.parent(v) ? f.parent(v) : std::optional<int>(root);
  parent[root] = std::nullopt;
  return RootedForest::from_parents(std::move(parent));
}

namespace {

using Mask = std::uint32_t;

struct TdSolver {
  const Graph& g;
  std::vector<Mask> nbr;
  std::unordered_map<Mask, std::pair<int, int>> memo;  // connected masks -> (depth, best root)

  explicit TdSolver(const Graph& graph) : g(graph) {
    nbr.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int w : g.neighbors(v)) nbr[v] |= Mask{1} << w;
  }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> comps;
    Mask rest = s;
    while (rest) {
      Mask comp = rest & -rest;
      for (;;) {
        Mask grow = comp;
        Mask frontier = comp;
        while (frontier) {
          int v = std::countr_zero(frontier);
          frontier &= frontier - 1;
          grow |= nbr[v] & s;
        }
        if (grow == comp) break;
        comp = grow;
      }
      comps.push_back(comp);
      rest &= ~comp;
    }
    return comps;
  }

  int depth_of(Mask s) {
    if (s == 0) return 0;
    auto comps = components(s);
    if (comps.size() > 1) {
      int best = 0;
      for (Mask c : comps) best = std::max(best, depth_of(c));
      return best;
    }
    auto it = memo.find(s);
    if (it != memo.end()) return it->second.first;
    int best = g.vertex_count() + 1, best_root = -1;
    Mask rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int cand = 1 + depth_of(s & ~(Mask{1} << v));
      if (cand < best) {
        best = cand;
        best_root = v;
      }
    }
    memo.emplace(s, std::make_pair(best, best_root));
    return best;
  }

  void build(Mask s, std::optional<int> parent, std::vector<std::optional<int>>& out) {
    for (Mask comp : components(s)) {
      depth_of(comp);  // ensure memoized
      int root = memo.at(comp).second;
      out[root] = parent;
      build(comp & ~(Mask{1} << root), root, out);
    }
  }
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, int vertex_cap) {
  if (vertex_cap > 31) throw std::invalid_argument("treedepth cap limited to 31 (bitmask states)");
  if (g.vertex_count() > vertex_cap)
    throw cap_exceeded("treedepth_exact: graph exceeds cap of " + std::to_string(vertex_cap) +
                       " vertices");
  TreedepthResult res;
  res.forest = RootedForest(g.vertex_count());
  if (g.vertex_count() == 0) return res;
  TdSolver solver(g);
  Mask all = (g.vertex_count() == 31) ? ~Mask{0} >> 1 : (Mask{1} << g.vertex_count()) - 1;
  res.depth = solver.depth_of(all);
  std::vector<std::optional<int>> parent(g.vertex_count());
  solver.build(all, std::nullopt, parent);
  res.forest = RootedForest::from_parents(std::move(parent));
  return res;
}

RootedForest dfs_forest(const Graph& g) {
  std::vector<std::optional<int>> parent(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  // iterative DFS, pushing neighbors in reverse so low ids come out first
  for (int r = 0; r < g.vertex_count(); ++r) {
    if (seen[r]) continue;
    std::vector<std::pair<int, std::optional<int>>> stack{{r, std::nullopt}};
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = p;
      const auto& nb = g.neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        if (!seen[*it]) stack.emplace_back(*it, v);
    }
  }
  return RootedForest::from_parents(std::move(parent));
}

}  // namespace riset
