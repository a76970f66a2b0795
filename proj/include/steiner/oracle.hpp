#pragma once

// Exact Steiner quantities on small general graphs. Steiner distance is the
// Dreyfus-Wagner dynamic program over (terminal subset, root vertex); the
// diameter/radius family is plain enumeration on top of it. Everything here is
// independent of the tree-specific code paths and serves as their oracle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "steiner/closed_forms.hpp"
#include "steiner/combinations.hpp"
#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph6.hpp"
#include "steiner/params.hpp"
#include "steiner/verdict.hpp"

namespace steiner {

inline constexpr std::size_t kMaxOracleOrder = 20;
inline constexpr std::size_t kMaxOracleTerminals = 12;
inline constexpr std::uint64_t kMaxOracleSubsets = 1'000'000;

namespace detail {

inline void check_oracle_order(const Graph& g) {
  if (g.order() > kMaxOracleOrder)
    fail(Errc::too_large, "oracle supports n <= " + std::to_string(kMaxOracleOrder) + ", got " + std::to_string(g.order()));
}

// Minimum Steiner tree size for `terminals` given all-pairs distances.
inline int dreyfus_wagner(const std::vector<std::vector<int>>& dist, std::span<const Vertex> terminals) {
  const std::size_t t = terminals.size();
  if (t <= 1) return 0;
  if (t == 2) return dist[terminals[0]][terminals[1]];
  const std::size_t n = dist.size();
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  const std::size_t full = (std::size_t{1} << t) - 1;
  std::vector<std::vector<int>> best(full + 1, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < t; ++i)
    for (Vertex v = 0; v < n; ++v) best[std::size_t{1} << i][v] = dist[terminals[i]][v];

  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    auto& row = best[mask];
    // merge: split the terminal subset at a common root
    const std::size_t low = mask & (~mask + 1);
    for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const auto& left = best[sub];
      const auto& right = best[mask ^ sub];
      for (Vertex v = 0; v < n; ++v) row[v] = std::min(row[v], left[v] + right[v]);
    }
    // grow: move the root along a shortest path
    std::vector<int> grown = row;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u) grown[v] = std::min(grown[v], row[u] + dist[u][v]);
    row = std::move(grown);
  }
  return *std::min_element(best[full].begin(), best[full].end());
}

inline std::uint32_t to_bits(std::span<const Vertex> members) {
  std::uint32_t bits = 0;
  for (Vertex v : members) bits |= std::uint32_t{1} << v;
  return bits;
}

}  // namespace detail

/// Minimum number of edges of a connected subgraph containing `terminals`.
inline int dw_steiner(const Graph& g, const VertexSet& terminals) {
  detail::check_oracle_order(g);
  if (terminals.empty()) fail(Errc::empty_set, "Steiner distance of an empty set");
  terminals.check_bounds(g.order());
  if (terminals.size() > kMaxOracleTerminals)
    fail(Errc::too_large, "oracle supports at most " + std::to_string(kMaxOracleTerminals) + " terminals");
  return detail::dreyfus_wagner(g.all_pairs_distances(), terminals.members());
}

namespace detail {

inline void check_subset_budget(const Graph& g, int k, const char* what) {
  check_oracle_order(g);
  if (k < 2 || static_cast<std::size_t>(k) > g.order())
    fail(Errc::bad_k, std::string(what) + ": k=" + std::to_string(k) + " outside [2, " + std::to_string(g.order()) + "]");
  if (static_cast<std::size_t>(k) > kMaxOracleTerminals)
    fail(Errc::too_large, std::string(what) + ": k exceeds the terminal limit");
  if (binomial(g.order(), k) > kMaxOracleSubsets)
    fail(Errc::too_large, std::string(what) + ": C(n,k) exceeds " + std::to_string(kMaxOracleSubsets));
}

}  // namespace detail

/// Steiner k-diameter by enumerating every k-subset.
inline SetValue brute_sd_k(const Graph& g, int k) {
  detail::check_subset_budget(g, k, "brute_sd_k");
  const auto dist = g.all_pairs_distances();
  SetValue best{-1, {}};
  for_each_combination(g.order(), k, [&](std::span<const Vertex> s) {
    const int value = detail::dreyfus_wagner(dist, s);
    if (value > best.value) best = SetValue{value, VertexSet(std::vector<Vertex>(s.begin(), s.end()))};
  });
  return best;
}

/// Steiner (k,k')-radius by double enumeration (k'-cores, then completions).
inline CoreRadius brute_sr_kk(const Graph& g, int k, int kprime) {
  detail::check_subset_budget(g, k, "brute_sr_kk");
  if (kprime < 1 || kprime > k)
    fail(Errc::bad_k, "brute_sr_kk: k'=" + std::to_string(kprime) + " outside [1, " + std::to_string(k) + "]");
  const auto dist = g.all_pairs_distances();
  const std::size_t n = g.order();

  std::unordered_map<std::uint32_t, int> value_of;
  value_of.reserve(binomial(n, k));
  for_each_combination(n, k, [&](std::span<const Vertex> s) { value_of[detail::to_bits(s)] = detail::dreyfus_wagner(dist, s); });

  CoreRadius best{-1, {}, {}};
  for_each_combination(n, kprime, [&](std::span<const Vertex> core) {
    std::vector<Vertex> pool;
    const std::uint32_t core_bits = detail::to_bits(core);
    for (Vertex v = 0; v < n; ++v)
      if (!(core_bits >> v & 1)) pool.push_back(v);
    int ecc = -1;
    std::uint32_t ecc_bits = 0;
    for_each_combination(std::span<const Vertex>(pool), k - kprime, [&](std::span<const Vertex> extra) {
      const std::uint32_t bits = core_bits | detail::to_bits(extra);
      const int value = value_of.at(bits);
      if (value > ecc) {
        ecc = value;
        ecc_bits = bits;
      }
    });
    if (best.value < 0 || ecc < best.value) {
      std::vector<Vertex> witness;
      for (Vertex v = 0; v < n; ++v)
        if (ecc_bits >> v & 1) witness.push_back(v);
      best = CoreRadius{ecc, VertexSet(std::vector<Vertex>(core.begin(), core.end())), VertexSet(std::move(witness))};
    }
  });
  return best;
}

/// Checks Sd_k <= 2(k+1)/(2k-1) Sr_k for k in {3,4} and Sd_k <= (k+3)/(k+1) Sr_k
/// for k >= 5, exactly.
inline Verdict check_general_bounds(const Graph& g, int k) {
  if (k < 3) fail(Errc::bad_k, "check_general_bounds needs k >= 3");
  const auto sd = brute_sd_k(g, k);
  const auto sr = brute_sr_kk(g, k, 1);
  const BoundKind bound = k <= 4 ? BoundKind::general_hos : BoundKind::general_reiswig;
  Verdict v;
  v.suite = to_string(bound);
  v.graph6 = graph6_encode(g);
  v.n = static_cast<int>(g.order());
  v.k = k;
  v.kprime = 1;
  settle(v, Rational(sd.value), bound_value(bound, k, 1, Rational(sr.value)));
  v.witnesses = {{"sd", sd.witness}, {"sr_core", sr.core}, {"sr_witness", sr.witness}};
  v.values = {{"sd", sd.value}, {"sr", sr.value}};
  return v;
}

/// Seeded random connected graph: a random recursive spanning tree plus each
/// remaining pair independently with probability `extra_per_mille`/1000.
/// Uses raw engine output so the same seed gives the same graph everywhere.
inline Graph random_connected_graph(std::size_t n, unsigned extra_per_mille, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  std::vector<Edge> tree_edges = edges;
  std::sort(tree_edges.begin(), tree_edges.end());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!std::binary_search(tree_edges.begin(), tree_edges.end(), Edge(u, v)) && rng() % 1000 < extra_per_mille)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

/// Seeded connected spanning subgraph of `g`: a random spanning tree (random
/// edge order, union-find) plus each remaining edge with probability 1/2.
inline Graph random_spanning_subgraph(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng() % i]);
  std::vector<Vertex> root(g.order());
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      root[a] = b;
      kept.push_back(e);
    } else if (rng() % 2 == 0) {
      kept.push_back(e);
    }
  }
  return Graph::from_edges(g.order(), std::move(kept));
}

}  // namespace steiner
