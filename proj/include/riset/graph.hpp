#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace riset {

using Edge = std::pair<int, int>;  // normalized u < v

// Thrown when an exact search would exceed its configured cap.
class cap_exceeded : public std::exception {
 public:
  explicit cap_exceeded(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

// Simple undirected graph on dense 0-indexed vertices.
// No loops, no parallel edges; neighbor lists kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  // Idempotent; throws on loops or out-of-range endpoints.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<Edge> edges() const;  // sorted lexicographically

  bool operator==(const Graph& other) const;

  void check_vertex(int v) const;  // throws std::out_of_range

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// BFS distances from v; std::nullopt marks unreachable vertices.
std::vector<std::optional<int>> distances_from(const Graph& g, int v);

// G^r: same vertices, edge iff 1 <= dist(u,v) <= r. Requires r >= 1.
Graph power(const Graph& g, int r);

struct Subdivision {
  Graph graph;                                // |V| + |E| vertices
  std::vector<std::pair<Edge, int>> edge_vertex;  // original edge -> its new mid vertex
  int vertex_for(Edge e) const;
};

// Replace each edge uv by u - x_e - v. New vertices are numbered
// |V(G)| + i following the sorted edge list.
Subdivision subdivide_once(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& members);

// Generators. Canonical numbering:
//   path(k):   0-1-...-(k-1)
//   cycle(k):  0-1-...-(k-1)-0, k >= 3
//   complete(k), empty(k): vertices 0..k-1
//   complete_multipartite(parts): parts numbered consecutively,
//       part i spans [sum(parts[0..i)), sum(parts[0..i]))
//   star(k):   center 0 plus leaves 1..k
//   co_nk2(n): complete_multipartite of n parts of size 2
Graph make_path(int k);
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_empty(int k);
Graph make_star(int leaves);
Graph make_complete_multipartite(const std::vector<int>& part_sizes);
Graph make_co_nk2(int n);
Graph disjoint_union(const std::vector<Graph>& parts);

// Exact chromatic number by branch and bound; throws cap_exceeded
// past the vertex cap (oracle-grade exact tool, no heuristic fallback).
int chromatic_number(const Graph& g, int vertex_cap = 16);

// Lexicographically least 2n-set inducing the complement of n disjoint
// edges, or nullopt. An induced co-nK2 is exactly a set in which every
// member has one non-neighbor inside the set.
std::optional<std::vector<int>> find_induced_co_nk2(const Graph& g, int n);

// Brute-force isomorphism via permutation search; throws cap_exceeded
// beyond the vertex cap.
bool is_isomorphic(const Graph& a, const Graph& b, int vertex_cap = 8);

// G[keep] with vertices relabeled by position in `keep` (sorted ascending).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace riset
