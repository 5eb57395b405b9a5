#include "riset/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace riset {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.resize(vertex_count);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(vertex_count()) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_;
}

std::vector<std::optional<int>> distances_from(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<std::optional<int>> dist(g.vertex_count());
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

Graph power(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power requires r >= 1");
  Graph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = distances_from(g, v);
    for (int u = v + 1; u < g.vertex_count(); ++u)
      if (dist[u] && *dist[u] <= r) out.add_edge(v, u);
  }
  return out;
}

int Subdivision::vertex_for(Edge e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  for (const auto& [edge, x] : edge_vertex)
    if (edge == e) return x;
  throw std::invalid_argument("edge not present in subdivided graph");
}

Subdivision subdivide_once(const Graph& g) {
  auto edge_list = g.edges();
  Subdivision out;
  out.graph = Graph(g.vertex_count() + static_cast<int>(edge_list.size()));
  out.edge_vertex.reserve(edge_list.size());
  int next = g.vertex_count();
  for (const Edge& e : edge_list) {
    out.graph.add_edge(e.first, next);
    out.graph.add_edge(next, e.second);
    out.edge_vertex.emplace_back(e, next);
    ++next;
  }
  return out;
}

bool is_independent(const Graph& g, const std::vector<int>& members) {
  for (int v : members) g.check_vertex(v);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (g.has_edge(members[i], members[j])) return false;
  return true;
}

Graph make_path(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least one vertex");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

Graph make_complete(int k) {
  if (k < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph make_empty(int k) {
  if (k < 0) throw std::invalid_argument("vertex count must be nonnegative");
  return Graph(k);
}

Graph make_star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph make_complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("need at least one part");
  int n = 0;
  std::vector<int> part_of;
  for (size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw std::invalid_argument("part sizes must be positive");
    n += part_sizes[p];
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph make_co_nk2(int n) {
  if (n < 1) throw std::invalid_argument("co_nk2 needs n >= 1");
  return make_complete_multipartite(std::vector<int>(n, 2));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& g : parts) n += g.vertex_count();
  Graph out(n);
  int off = 0;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) out.add_edge(e.first + off, e.second + off);
    off += g.vertex_count();
  }
  return out;
}

namespace {

bool color_with(const Graph& g, const std::vector<int>& order, int k) {
  std::vector<int> color(g.vertex_count(), -1);
  // assign along `order`; a vertex may only open one fresh color
  auto rec = [&](auto&& self, size_t idx, int used) -> bool {
    if (idx == order.size()) return true;
    int v = order[idx];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw cap_exceeded("chromatic_number: graph exceeds exact-search cap of " +
                       std::to_string(vertex_cap) + " vertices");
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
  for (int k = 2;; ++k)
    if (color_with(g, order, k)) return k;
}

std::optional<std::vector<int>> find_induced_co_nk2(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("find_induced_co_nk2 needs n >= 1");
  int target = 2 * n;
  if (g.vertex_count() < target) return std::nullopt;
  std::vector<int> chosen;
  // DFS in increasing vertex order; first full set found is lexicographically least.
  // Feasible partial set: every member has at most one non-neighbor inside.
  auto non_neighbors_inside = [&](int v) {
    int cnt = 0;
    for (int w : chosen)
      if (w != v && !g.has_edge(v, w)) ++cnt;
    return cnt;
  };
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == target) {
      for (int v : chosen)
        if (non_neighbors_inside(v) != 1) return false;
      return true;
    }
    int need = target - static_cast<int>(chosen.size());
    for (int v = start; v + need <= g.vertex_count(); ++v) {
      bool ok = non_neighbors_inside(v) <= 1;
      if (ok)
        for (int w : chosen)
          if (!g.has_edge(v, w) && non_neighbors_inside(w) >= 1) {
            ok = false;
            break;
          }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return chosen;
  return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b, int vertex_cap) {
  if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
    throw cap_exceeded("is_isomorphic: graph exceeds permutation-search cap of " +
                       std::to_string(vertex_cap) + " vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map_to(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.has_edge(u, v) != b.has_edge(map_to[u], w)) ok = false;
      if (!ok) continue;
      map_to[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map_to[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  for (int v : keep) g.check_vertex(v);
  if (!std::is_sorted(keep.begin(), keep.end()) ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("induced_subgraph expects sorted distinct vertices");
  std::vector<int> new_id(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (int v : keep)
    for (int w : g.neighbors(v))
      if (v < w && new_id[w] >= 0) out.add_edge(new_id[v], new_id[w]);
  return out;
}

}  // namespace riset
