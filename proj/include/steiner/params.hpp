#pragma once

// Steiner eccentricity-family parameters of trees.
//
// The k-diameter and every (k,k')-eccentricity are computed by greedy
// farthest-vertex augmentation of a growing subtree: starting from the core set
// (a diametrical pair, a single vertex, or S'), repeatedly add the vertex
// farthest from the current subtree. Nested optimal sets exist for trees, so the
// greedy choice is exact whenever enough pendant vertices remain outside the
// core; otherwise the brute-force counterpart is used. Exhaustive versions are
// exposed alongside for cross-checking.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "steiner/combinations.hpp"
#include "steiner/error.hpp"
#include "steiner/tree.hpp"
#include "steiner/vertex_set.hpp"

namespace steiner {

/// Optimal value together with one set realizing it.
struct SetValue {
  int value = 0;
  VertexSet witness;
};

struct VertexRadius {
  int value = 0;
  Vertex argmin = 0;
  VertexSet witness;  // a k-set containing argmin realizing its eccentricity
};

struct CoreRadius {
  int value = 0;
  VertexSet core;     // argmin k'-set S'
  VertexSet witness;  // a k-superset of core realizing its eccentricity
};

namespace detail {

inline void check_k(const Tree& tree, int k, int lowest, const char* what) {
  if (k < lowest || static_cast<std::size_t>(k) > tree.order())
    fail(Errc::bad_k, std::string(what) + ": k=" + std::to_string(k) + " outside [" + std::to_string(lowest) + ", " +
                          std::to_string(tree.order()) + "]");
}

// Adds `steps` vertices to `chosen`, each time the non-chosen vertex farthest
// from the subtree marked in `in_subtree` (smallest id on ties), and grows the
// subtree by the connecting path. Returns the number of edges added.
inline int greedy_extend(const Tree& tree, std::vector<char>& in_subtree, std::vector<char>& chosen, int steps) {
  int added = 0;
  for (int step = 0; step < steps; ++step) {
    const auto bfs = bfs_from_mask(tree, in_subtree);
    Vertex best = kNoParent;
    for (Vertex v = 0; v < tree.order(); ++v)
      if (!chosen[v] && (best == kNoParent || bfs.dist[v] > bfs.dist[best])) best = v;
    chosen[best] = 1;
    added += bfs.dist[best];
    for (Vertex v = best; !in_subtree[v]; v = bfs.parent[v]) in_subtree[v] = 1;
  }
  return added;
}

inline VertexSet mask_to_set(const std::vector<char>& mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

inline std::vector<char> set_to_mask(const VertexSet& s, std::size_t n) {
  std::vector<char> mask(n, 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

}  // namespace detail

/// Maximum Steiner distance over k-sets containing `core`, by enumerating
/// every completion. Witness is the lexicographically first maximizer.
inline SetValue ecc_kk_brute(const Tree& tree, const VertexSet& core, int k) {
  if (core.empty()) fail(Errc::empty_set, "ecc_kk needs a non-empty core set");
  core.check_bounds(tree.order());
  if (static_cast<std::size_t>(k) < core.size() || static_cast<std::size_t>(k) > tree.order())
    fail(Errc::bad_k, "ecc_kk: need |S'| <= k <= n, got k=" + std::to_string(k));

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (!core.contains(v)) pool.push_back(v);
  SetValue best{-1, {}};
  for_each_combination(std::span<const Vertex>(pool), k - core.size(), [&](std::span<const Vertex> extra) {
    std::vector<Vertex> members(core.begin(), core.end());
    members.insert(members.end(), extra.begin(), extra.end());
    VertexSet s(std::move(members));
    const int value = steiner_distance(tree, s).value;
    if (value > best.value || (value == best.value && s < best.witness)) best = SetValue{value, std::move(s)};
  });
  return best;
}

/// Steiner (k,|S'|)-eccentricity of `core`.
inline SetValue ecc_kk(const Tree& tree, const VertexSet& core, int k) {
  if (core.empty()) fail(Errc::empty_set, "ecc_kk needs a non-empty core set");
  core.check_bounds(tree.order());
  if (static_cast<std::size_t>(k) < core.size() || static_cast<std::size_t>(k) > tree.order())
    fail(Errc::bad_k, "ecc_kk: need |S'| <= k <= n, got k=" + std::to_string(k));

  const int extra = k - static_cast<int>(core.size());
  if (extra == 0) return SetValue{steiner_distance(tree, core).value, core};

  const auto leaves = tree.leaves();
  const auto free_leaves = std::count_if(leaves.begin(), leaves.end(), [&](Vertex v) { return !core.contains(v); });
  if (free_leaves < extra) return ecc_kk_brute(tree, core, k);

  auto in_subtree = steiner_subtree_mask(tree, core);
  auto chosen = detail::set_to_mask(core, tree.order());
  const int base = steiner_distance(tree, core).value;
  const int added = detail::greedy_extend(tree, in_subtree, chosen, extra);
  return SetValue{base + added, detail::mask_to_set(chosen)};
}

/// Steiner k-eccentricity of a single vertex.
inline SetValue ecc_k(const Tree& tree, Vertex v, int k) {
  tree.check_vertex(v);
  detail::check_k(tree, k, 2, "ecc_k");
  return ecc_kk(tree, VertexSet{v}, k);
}

/// Maximum Steiner distance over all k-subsets, by enumeration.
inline SetValue sd_k_brute(const Tree& tree, int k) {
  detail::check_k(tree, k, 2, "sd_k");
  SetValue best{-1, {}};
  for_each_combination(tree.order(), k, [&](std::span<const Vertex> members) {
    VertexSet s(std::vector<Vertex>(members.begin(), members.end()));
    const int value = steiner_distance(tree, s).value;
    if (value > best.value) best = SetValue{value, std::move(s)};
  });
  return best;
}

/// Steiner k-diameter. Greedy augmentation of a diametrical pair; once k
/// reaches the number of pendant vertices the whole edge set is spanned.
inline SetValue sd_k(const Tree& tree, int k) {
  detail::check_k(tree, k, 2, "sd_k");
  const auto leaves = tree.leaves();
  if (static_cast<std::size_t>(k) >= leaves.size()) {
    std::vector<Vertex> members(leaves.begin(), leaves.end());
    for (Vertex v = 0; members.size() < static_cast<std::size_t>(k); ++v)
      if (!tree.is_leaf(v)) members.push_back(v);
    return SetValue{static_cast<int>(tree.edge_count()), VertexSet(std::move(members))};
  }
  const auto profile = center_profile(tree);
  std::vector<char> in_subtree(tree.order(), 0);
  for (Vertex v : profile.path) in_subtree[v] = 1;
  std::vector<char> chosen(tree.order(), 0);
  chosen[profile.path.front()] = chosen[profile.path.back()] = 1;
  const int added = detail::greedy_extend(tree, in_subtree, chosen, k - 2);
  return SetValue{profile.diameter + added, detail::mask_to_set(chosen)};
}

/// Steiner k-radius: minimum k-eccentricity over all vertices (smallest id on ties).
inline VertexRadius sr_k(const Tree& tree, int k) {
  detail::check_k(tree, k, 2, "sr_k");
  VertexRadius best{-1, 0, {}};
  for (Vertex v = 0; v < tree.order(); ++v) {
    auto e = ecc_k(tree, v, k);
    if (best.value < 0 || e.value < best.value) best = VertexRadius{e.value, v, std::move(e.witness)};
  }
  return best;
}

/// Steiner (k,k')-radius by enumerating every k'-subset as the core.
inline CoreRadius sr_kk_brute(const Tree& tree, int k, int kprime) {
  detail::check_k(tree, k, 1, "sr_kk");
  if (kprime < 1 || kprime > k)
    fail(Errc::bad_k, "sr_kk: k'=" + std::to_string(kprime) + " outside [1, " + std::to_string(k) + "]");
  CoreRadius best{-1, {}, {}};
  for_each_combination(tree.order(), kprime, [&](std::span<const Vertex> members) {
    VertexSet core(std::vector<Vertex>(members.begin(), members.end()));
    auto e = ecc_kk(tree, core, k);
    if (best.value < 0 || e.value < best.value) best = CoreRadius{e.value, std::move(core), std::move(e.witness)};
  });
  return best;
}

/// Deep pendant vertices with pairwise edge-disjoint paths to the center,
/// relative to one diametrical path.
struct ASet {
  VertexSet members;
  std::vector<std::vector<Vertex>> witness_paths;  // aligned with members; member first, central vertex last
  std::vector<Vertex> source_path;
};

/// Builds the set for an explicit diametrical path u_0 ... u_d: one pendant
/// vertex at depth floor(d/2) per branch of each central vertex, preferring
/// u_0 / u_d and otherwise the smallest id.
inline ASet a_set_for_path(const Tree& tree, std::span<const Vertex> path) {
  if (tree.order() < 2) fail(Errc::precondition, "a_set needs n >= 2");
  const int d = static_cast<int>(path.size()) - 1;
  ASet out;
  out.source_path.assign(path.begin(), path.end());
  if (d == 1) {
    out.members = VertexSet{path[0], path[1]};
    out.witness_paths = {{out.members[0]}, {out.members[1]}};
    return out;
  }

  std::vector<Vertex> centers{path[d / 2]};
  if (d % 2 == 1) centers.push_back(path[d / 2 + 1]);
  const int depth_needed = d / 2;
  const Vertex end_a = path.front(), end_b = path.back();

  std::vector<std::pair<Vertex, std::vector<Vertex>>> picked;
  std::vector<Vertex> parent(tree.order(), kNoParent);
  for (Vertex c : centers) {
    for (Vertex first : tree.neighbors(c)) {
      if (centers.size() == 2 && (first == centers[0] || first == centers[1])) continue;
      Vertex choice = kNoParent;
      std::vector<std::pair<Vertex, int>> stack{{first, 1}};
      parent[first] = c;
      while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        if (depth == depth_needed) {
          const bool is_end = v == end_a || v == end_b;
          const bool choice_is_end = choice != kNoParent && (choice == end_a || choice == end_b);
          if (choice == kNoParent || is_end || (!choice_is_end && v < choice)) choice = v;
          continue;
        }
        for (Vertex w : tree.neighbors(v))
          if (w != parent[v]) {
            parent[w] = v;
            stack.emplace_back(w, depth + 1);
          }
      }
      if (choice == kNoParent) continue;
      std::vector<Vertex> witness{choice};
      for (Vertex v = choice; v != c;) witness.push_back(v = parent[v]);
      picked.emplace_back(choice, std::move(witness));
    }
  }
  std::sort(picked.begin(), picked.end());
  std::vector<Vertex> members;
  for (auto& [v, witness] : picked) {
    members.push_back(v);
    out.witness_paths.push_back(std::move(witness));
  }
  out.members = VertexSet(std::move(members));
  return out;
}

inline ASet a_set(const Tree& tree, const CenterProfile& profile) { return a_set_for_path(tree, profile.path); }

/// Every diametrical path, as u_0 < u_d endpoint pairs in lexicographic order.
inline std::vector<std::vector<Vertex>> diametrical_paths(const Tree& tree) {
  const int d = center_profile(tree).diameter;
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < tree.order(); ++u) {
    const auto bfs = bfs_from(tree, u);
    for (Vertex v = u + 1; v < tree.order(); ++v)
      if (bfs.dist[v] == d) out.push_back(tree_path(tree, u, v));
  }
  if (out.empty()) out.push_back({0});
  return out;
}

/// {u_{floor(d/2)}, u_{floor(d/2)+1}} on the profile's diametrical path.
inline VertexSet central_pair(const CenterProfile& profile) {
  const int h = profile.half();
  return VertexSet{profile.path[h], profile.path[h + 1]};
}

/// {u_{floor(d/2)-1}, u_{floor(d/2)}, u_{floor(d/2)+1}}; needs d >= 2.
inline VertexSet central_triple(const CenterProfile& profile) {
  const int h = profile.half();
  return VertexSet{profile.path[h - 1], profile.path[h], profile.path[h + 1]};
}

/// Whether the closed-form (k,k') radius applies; tiny trees always go to
/// enumeration.
inline bool fast_path_applies(const Tree& tree, int k, int kprime) {
  const auto n = tree.order();
  if (n <= 4 || static_cast<std::size_t>(k) > n) return false;
  const int d = center_profile(tree).diameter;
  if (kprime == 2) return k >= 3 && d >= 1;
  if (kprime == 3) return k >= 4 && d >= 2;
  return false;
}

/// Steiner (k,2)-radius from |A| and the diameter.
inline int sr_k2_fast(const Tree& tree, int k) {
  detail::check_k(tree, k, 3, "sr_k2_fast");
  if (!fast_path_applies(tree, k, 2)) return sr_kk_brute(tree, k, 2).value;
  const auto profile = center_profile(tree);
  const int a = static_cast<int>(a_set(tree, profile).members.size());
  if (a <= k - 2) return sd_k(tree, k - 2).value;
  return (k - 2) * profile.half() + 1;
}

/// Steiner (k,3)-radius from |A| and the diameter.
inline int sr_k3_fast(const Tree& tree, int k) {
  detail::check_k(tree, k, 4, "sr_k3_fast");
  if (!fast_path_applies(tree, k, 3)) return sr_kk_brute(tree, k, 3).value;
  const auto profile = center_profile(tree);
  const int a = static_cast<int>(a_set(tree, profile).members.size());
  const int d = profile.diameter;
  if (a <= k - 3) return sd_k(tree, k - 3).value;
  if (a == k - 2) return (k - 4) * (d / 2) + (d + 1) / 2 + 1;
  return (k - 3) * (d / 2) + 2;
}

enum class SrRoute { brute, central_pair, central_triple };

inline const char* to_string(SrRoute r) {
  switch (r) {
    case SrRoute::brute: return "brute";
    case SrRoute::central_pair: return "central_pair";
    case SrRoute::central_triple: return "central_triple";
  }
  return "brute";
}

struct ParamRecord {
  int n = 0;
  int k = 0;
  int kprime = 0;
  int sd_k = 0;
  int sr_k = 0;
  int sr_kk = 0;
  int diam = 0;
  int a_size = 0;
  SrRoute route = SrRoute::brute;
  VertexSet sd_witness;
  Vertex sr_center = 0;
  VertexSet sr_kk_core;
};

/// All parameters for one (T, k, k'); closed forms for k' in {2,3} when they apply.
inline ParamRecord param_record(const Tree& tree, int k, int kprime) {
  detail::check_k(tree, k, 2, "param_record");
  if (kprime < 1 || kprime > k)
    fail(Errc::bad_k, "param_record: k'=" + std::to_string(kprime) + " outside [1, " + std::to_string(k) + "]");
  ParamRecord r;
  r.n = static_cast<int>(tree.order());
  r.k = k;
  r.kprime = kprime;
  const auto profile = center_profile(tree);
  r.diam = profile.diameter;
  r.a_size = static_cast<int>(a_set(tree, profile).members.size());
  auto sd = sd_k(tree, k);
  r.sd_k = sd.value;
  r.sd_witness = std::move(sd.witness);
  const auto radius = sr_k(tree, k);
  r.sr_k = radius.value;
  r.sr_center = radius.argmin;

  if (kprime == 1) {
    r.sr_kk = radius.value;
    r.sr_kk_core = VertexSet{radius.argmin};
  } else if (kprime == 2 && fast_path_applies(tree, k, 2)) {
    r.sr_kk = sr_k2_fast(tree, k);
    r.sr_kk_core = central_pair(profile);
    r.route = SrRoute::central_pair;
  } else if (kprime == 3 && fast_path_applies(tree, k, 3)) {
    r.sr_kk = sr_k3_fast(tree, k);
    r.sr_kk_core = central_triple(profile);
    r.route = SrRoute::central_triple;
  } else {
    auto brute = sr_kk_brute(tree, k, kprime);
    r.sr_kk = brute.value;
    r.sr_kk_core = std::move(brute.core);
  }
  return r;
}

}  // namespace steiner
