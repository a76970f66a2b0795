#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/vertex_set.hpp"

namespace steiner {

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unvalidated vertex count plus edges, as read from an interchange format.
struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

inline constexpr int kUnreachable = -1;

/// Breadth-first distances from `source` over a sorted adjacency structure.
inline std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<int> dist(adjacency.size(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Simple connected graph with unit edge weights.
class Graph {
 public:
  /// Validates simplicity and connectivity; throws BadGraph otherwise.
  static Graph from_edges(const EdgeList& list) {
    Graph g;
    g.adjacency_ = build_adjacency(list, Errc::bad_graph);
    if (list.n == 0) fail(Errc::bad_graph, "graph has no vertices");
    const auto dist = bfs_distances(g.adjacency_, 0);
    for (std::size_t v = 0; v < dist.size(); ++v)
      if (dist[v] == kUnreachable) fail(Errc::bad_graph, "vertex " + std::to_string(v) + " unreachable from 0");
    return g;
  }

  static Graph from_edges(std::size_t n, std::vector<Edge> edges) { return from_edges(EdgeList{n, std::move(edges)}); }

  std::size_t order() const noexcept { return adjacency_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(Vertex a, Vertex b) const {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adjacency_.size(); ++u)
      for (Vertex w : adjacency_[u])
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
  }

  EdgeList edge_list() const { return EdgeList{order(), edges()}; }

  /// Shortest-path distance matrix, one BFS per vertex.
  std::vector<std::vector<int>> all_pairs_distances() const {
    std::vector<std::vector<int>> out;
    out.reserve(order());
    for (Vertex v = 0; v < order(); ++v) out.push_back(bfs_distances(adjacency_, v));
    return out;
  }

  // Shared with Tree: sorted adjacency, rejecting loops, duplicates and bad ids.
  static std::vector<std::vector<Vertex>> build_adjacency(const EdgeList& list, Errc code) {
    std::vector<std::vector<Vertex>> adjacency(list.n);
    for (const Edge& e : list.edges) {
      if (e.v >= list.n)
        fail(code, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " names a vertex >= " +
                       std::to_string(list.n));
      if (e.u == e.v) fail(code, "self-loop at vertex " + std::to_string(e.u));
      adjacency[e.u].push_back(e.v);
      adjacency[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < list.n; ++v) {
      auto& nbrs = adjacency[v];
      std::sort(nbrs.begin(), nbrs.end());
      auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
      if (dup != nbrs.end())
        fail(code, "repeated edge " + std::to_string(std::min(v, *dup)) + "-" + std::to_string(std::max(v, *dup)));
    }
    return adjacency;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace steiner
