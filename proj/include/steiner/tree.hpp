#pragma once

// Labeled trees and the classical metric queries on them: distances,
// eccentricity, the diametrical path and center, and the Steiner distance of a
// terminal set (size of the minimal subtree spanning it).

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/vertex_set.hpp"

namespace steiner {

/// Throws NotATree naming the first offending element: a bad id, a loop, a
/// repeated edge, the first edge (in input order) closing a cycle, or the
/// smallest vertex unreachable from 0.
inline void validate_tree(const EdgeList& list) {
  if (list.n == 0) fail(Errc::not_a_tree, "a tree needs at least one vertex");
  Graph::build_adjacency(list, Errc::not_a_tree);

  std::vector<Vertex> root(list.n);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Edge& e : list.edges) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a == b) fail(Errc::not_a_tree, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " closes a cycle");
    root[a] = b;
  }
  const Vertex base = find(0);
  for (Vertex v = 1; v < list.n; ++v)
    if (find(v) != base) fail(Errc::not_a_tree, "vertex " + std::to_string(v) + " is disconnected from vertex 0");
}

/// Immutable labeled tree on vertices 0..n-1 with sorted adjacency lists.
class Tree {
 public:
  static Tree from_edges(const EdgeList& list) {
    validate_tree(list);
    Tree t;
    t.adjacency_ = Graph::build_adjacency(list, Errc::not_a_tree);
    return t;
  }

  static Tree from_edges(std::size_t n, std::vector<Edge> edges) { return from_edges(EdgeList{n, std::move(edges)}); }

  static Tree from_graph(const Graph& g) { return from_edges(g.edge_list()); }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() - 1; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool is_leaf(Vertex v) const { return adjacency_[v].size() == 1; }

  /// Pendant vertices. Empty for the single-vertex tree.
  VertexSet leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v)
      if (is_leaf(v)) out.push_back(v);
    return VertexSet(std::move(out));
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex w : adjacency_[u])
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  EdgeList edge_list() const { return EdgeList{order(), edges()}; }
  Graph to_graph() const { return Graph::from_edges(edge_list()); }

  void check_vertex(Vertex v) const {
    if (v >= order())
      fail(Errc::bad_vertex, "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

struct BfsResult {
  std::vector<int> dist;
  std::vector<Vertex> parent;  // kNoParent at sources
};

/// Multi-source BFS; sources are given by a membership mask.
inline BfsResult bfs_from_mask(const Tree& tree, const std::vector<char>& sources) {
  BfsResult r{std::vector<int>(tree.order(), kUnreachable), std::vector<Vertex>(tree.order(), kNoParent)};
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (sources[v]) {
      r.dist[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : tree.neighbors(u))
      if (r.dist[w] == kUnreachable) {
        r.dist[w] = r.dist[u] + 1;
        r.parent[w] = u;
        queue.push_back(w);
      }
  }
  return r;
}

inline BfsResult bfs_from(const Tree& tree, Vertex source) {
  tree.check_vertex(source);
  std::vector<char> mask(tree.order(), 0);
  mask[source] = 1;
  return bfs_from_mask(tree, mask);
}

inline int distance(const Tree& tree, Vertex u, Vertex v) {
  tree.check_vertex(v);
  return bfs_from(tree, u).dist[v];
}

inline int eccentricity(const Tree& tree, Vertex v) {
  const auto dist = bfs_from(tree, v).dist;
  return *std::max_element(dist.begin(), dist.end());
}

/// Vertex sequence from `from` to `to` (inclusive).
inline std::vector<Vertex> tree_path(const Tree& tree, Vertex from, Vertex to) {
  tree.check_vertex(to);
  const auto bfs = bfs_from(tree, from);
  std::vector<Vertex> path{to};
  for (Vertex v = to; v != from;) {
    v = bfs.parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct Branch {
  Vertex first;  // neighbour of the center that opens the branch
  int depth;     // deepest vertex of the branch, measured from the center
};

struct CenterBranches {
  Vertex center;
  std::vector<Branch> branches;
};

/// Diameter, one diametrical path, the center and the branch depths hanging
/// off each central vertex (the edge between two centers is not a branch).
struct CenterProfile {
  int diameter = 0;
  std::vector<Vertex> path;       // u_0 ... u_d
  std::vector<Vertex> centers;    // path order: u_{floor(d/2)} first
  std::vector<CenterBranches> branch_table;

  int radius() const { return (diameter + 1) / 2; }
  int half() const { return diameter / 2; }
};

namespace detail {

// Smallest id among the vertices at maximum distance.
inline Vertex farthest(const std::vector<int>& dist) {
  Vertex best = 0;
  for (Vertex v = 1; v < dist.size(); ++v)
    if (dist[v] > dist[best]) best = v;
  return best;
}

// Depth of the branch entered from `center` via `first`.
inline int branch_depth(const Tree& tree, Vertex center, Vertex first) {
  int deepest = 1;
  std::vector<std::pair<Vertex, int>> stack{{first, 1}};
  std::vector<Vertex> parent(tree.order(), kNoParent);
  parent[first] = center;
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, depth);
    for (Vertex w : tree.neighbors(v))
      if (w != parent[v]) {
        parent[w] = v;
        stack.emplace_back(w, depth + 1);
      }
  }
  return deepest;
}

}  // namespace detail

/// Double BFS from vertex 0, smallest id among farthest vertices at each step.
inline CenterProfile center_profile(const Tree& tree) {
  CenterProfile p;
  const Vertex a = detail::farthest(bfs_from(tree, 0).dist);
  const auto from_a = bfs_from(tree, a);
  const Vertex b = detail::farthest(from_a.dist);
  p.diameter = from_a.dist[b];
  for (Vertex v = b; v != kNoParent; v = from_a.parent[v]) p.path.push_back(v);
  std::reverse(p.path.begin(), p.path.end());

  const int d = p.diameter;
  p.centers.push_back(p.path[d / 2]);
  if (d % 2 == 1) p.centers.push_back(p.path[d / 2 + 1]);

  for (Vertex c : p.centers) {
    CenterBranches cb{c, {}};
    for (Vertex w : tree.neighbors(c)) {
      if (p.centers.size() == 2 && (w == p.centers[0] || w == p.centers[1])) continue;
      cb.branches.push_back(Branch{w, detail::branch_depth(tree, c, w)});
    }
    p.branch_table.push_back(std::move(cb));
  }
  return p;
}

/// Vertex mask of the minimal subtree spanning `terminals`, obtained by
/// repeatedly pruning leaves that are not terminals.
inline std::vector<char> steiner_subtree_mask(const Tree& tree, const VertexSet& terminals) {
  const std::size_t n = tree.order();
  std::vector<char> keep(n, 1);
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1 && !terminals.contains(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!keep[v]) continue;
    keep[v] = 0;
    for (Vertex w : tree.neighbors(v))
      if (keep[w] && --degree[w] == 1 && !terminals.contains(w)) queue.push_back(w);
  }
  return keep;
}

struct SteinerWitness {
  int value = 0;
  std::vector<Edge> edges;  // sorted
};

inline SteinerWitness steiner_distance(const Tree& tree, const VertexSet& terminals) {
  if (terminals.empty()) fail(Errc::empty_set, "Steiner distance of an empty set");
  terminals.check_bounds(tree.order());
  const auto keep = steiner_subtree_mask(tree, terminals);
  SteinerWitness w;
  for (Vertex u = 0; u < tree.order(); ++u)
    if (keep[u])
      for (Vertex v : tree.neighbors(u))
        if (u < v && keep[v]) w.edges.emplace_back(u, v);
  w.value = static_cast<int>(w.edges.size());
  return w;
}

/// Distance inside the spanning subtree of `leaf_set` from `v` to its nearest
/// vertex of degree >= 3 in that subtree.
inline int leaf_branch_length(const Tree& tree, const VertexSet& leaf_set, Vertex v) {
  leaf_set.check_bounds(tree.order());
  tree.check_vertex(v);
  if (leaf_set.size() < 3) fail(Errc::precondition, "leaf_branch_length needs |S| >= 3");
  if (tree.leaves().size() < 3) fail(Errc::precondition, "leaf_branch_length needs a tree with >= 3 leaves");
  if (!leaf_set.contains(v)) fail(Errc::precondition, "vertex " + std::to_string(v) + " is not in S");
  for (Vertex s : leaf_set)
    if (!tree.is_leaf(s)) fail(Errc::precondition, "S must consist of pendant vertices; " + std::to_string(s) + " is not");

  const auto keep = steiner_subtree_mask(tree, leaf_set);
  auto sub_degree = [&](Vertex u) {
    return std::count_if(tree.neighbors(u).begin(), tree.neighbors(u).end(), [&](Vertex w) { return keep[w] != 0; });
  };
  // v is a leaf of the subtree; walk inward until the first branching vertex.
  int length = 0;
  Vertex prev = kNoParent, cur = v;
  while (sub_degree(cur) < 3) {
    Vertex next = kNoParent;
    for (Vertex w : tree.neighbors(cur))
      if (keep[w] && w != prev) next = w;
    prev = cur;
    cur = next;
    ++length;
  }
  return length;
}

}  // namespace steiner
