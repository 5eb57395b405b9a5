#pragma once

#include <optional>
#include <vector>

#include "riset/graph.hpp"

namespace riset {

// Rooted forest as a parent map; roots are the parentless vertices.
// The parent relation is validated to be acyclic with every vertex
// reaching exactly one root.
class RootedForest {
 public:
  RootedForest() = default;
  explicit RootedForest(int singleton_roots);
  static RootedForest from_parents(std::vector<std::optional<int>> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  std::optional<int> parent(int v) const;
  std::vector<int> roots() const;
  std::vector<std::vector<int>> children() const;  // sorted per vertex
  bool is_tree() const { return size() >= 1 && roots().size() == 1; }

  int depth(int v) const;                  // roots have depth 0
  std::vector<int> ancestors(int v) const; // proper ancestors, nearest first
  bool is_ancestor(int a, int v) const;    // proper ancestor test

  bool operator==(const RootedForest& other) const { return parent_ == other.parent_; }

 private:
  std::vector<std::optional<int>> parent_;
};

// Forest plus all vertex-to-ancestor edges.
Graph closure(const RootedForest& f);

// Number of vertices on a longest root-to-leaf path; 0 for the empty forest.
int height(const RootedForest& f);

// True iff every edge of g joins a vertex to one of its f-ancestors.
// Requires matching vertex universes.
bool embeds_in_closure(const Graph& g, const RootedForest& f);

// New vertex (index |V|) becomes the root of the whole forest; all former
// roots become its children. The result is a tree.
RootedForest attach_root(const RootedForest& f);

struct TreedepthResult {
  int depth = 0;
  RootedForest forest;
};

// Exact tree-depth with a witness forest: height(forest) == depth and
// embeds_in_closure(g, forest). Recursion memoized on vertex-subset
// bitmasks; root ties broken toward the lowest-numbered vertex.
// The empty graph gets depth 0 with an empty forest.
TreedepthResult treedepth_exact(const Graph& g, int vertex_cap = 18);

// Depth-first search forest: roots at the lowest-id unvisited vertex,
// neighbors scanned in increasing order. Its closure always contains g
// (undirected DFS produces only back edges).
RootedForest dfs_forest(const Graph& g);

}  // namespace riset
