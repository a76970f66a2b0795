#pragma once

// Non-isomorphic free trees: AHU canonical codes and exhaustive enumeration.
//
// Enumeration walks rooted-tree level sequences in the Beyer-Hedetniemi
// successor order (each rooted tree once, canonical form) and keeps a rooted
// tree exactly when its root is a centroid; for bicentroidal trees only the
// rooting with the smaller AHU code survives.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph6.hpp"
#include "steiner/tree.hpp"

namespace steiner {

inline constexpr std::size_t kMaxEnumerationOrder = 16;

struct CanonicalCode {
  std::string text;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// AHU code of `tree` rooted at `root`: "(" + sorted child codes + ")".
inline std::string rooted_code(const Tree& tree, Vertex root) {
  const std::size_t n = tree.order();
  std::vector<Vertex> order, parent(n, kNoParent);
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : tree.neighbors(v))
      if (parent[w] == kNoParent) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code = "(";
    for (auto& k : kids) code += k;
    code += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (*it != root) child_codes[parent[*it]].push_back(code);
  }
  return code;
}

/// One or two centroids, ascending.
inline std::vector<Vertex> centroids(const Tree& tree) {
  const std::size_t n = tree.order();
  std::vector<Vertex> order, parent(n, kNoParent);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : tree.neighbors(v))
      if (parent[w] == kNoParent) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::size_t> size(n, 1), heaviest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != 0) {
      size[parent[*it]] += size[*it];
      heaviest[parent[*it]] = std::max(heaviest[parent[*it]], size[*it]);
    }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (2 * std::max(heaviest[v], n - size[v]) <= n) out.push_back(v);
  return out;
}

/// Isomorphism-complete code: AHU at the centroid, the smaller of the two
/// rootings for bicentroidal trees.
inline CanonicalCode canonical_code(const Tree& tree) {
  const auto cs = centroids(tree);
  std::string best = rooted_code(tree, cs.front());
  if (cs.size() == 2) best = std::min(best, rooted_code(tree, cs.back()));
  return CanonicalCode{std::move(best)};
}

/// Streams one representative per isomorphism class of free trees of order n,
/// in a fixed order. Vertices are labeled in preorder from the centroid root.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n) : n_(n) {
    if (n < 1) fail(Errc::precondition, "tree order must be >= 1");
    if (n > kMaxEnumerationOrder)
      fail(Errc::too_large, "enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
    levels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) levels_[i] = static_cast<int>(i);
  }

  std::optional<Tree> next() {
    while (!done_) {
      auto tree = accept_current();
      advance();
      if (tree) return tree;
    }
    return std::nullopt;
  }

 private:
  // Beyer-Hedetniemi successor of the current level sequence.
  void advance() {
    std::size_t p = n_;
    for (std::size_t i = n_; i-- > 0;)
      if (levels_[i] > 1) {
        p = i;
        break;
      }
    if (p == n_) {
      done_ = true;
      return;
    }
    std::size_t q = p;
    while (levels_[q] != levels_[p] - 1) --q;
    const std::size_t shift = p - q;
    for (std::size_t i = p; i < n_; ++i) levels_[i] = levels_[i - shift];
  }

  std::optional<Tree> accept_current() const {
    std::vector<Vertex> parent(n_, kNoParent), last_at_level(n_, 0);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n_; ++i) {
      parent[i] = last_at_level[levels_[i] - 1];
      last_at_level[levels_[i]] = static_cast<Vertex>(i);
      edges.emplace_back(parent[i], static_cast<Vertex>(i));
    }
    std::vector<std::size_t> size(n_, 1);
    for (std::size_t i = n_; i-- > 1;) size[parent[i]] += size[i];

    Vertex twin = kNoParent;
    for (std::size_t i = 1; i < n_; ++i)
      if (parent[i] == 0) {
        if (2 * size[i] > n_) return std::nullopt;
        if (2 * size[i] == n_) twin = static_cast<Vertex>(i);
      }
    Tree tree = Tree::from_edges(n_, std::move(edges));
    if (twin != kNoParent && rooted_code(tree, 0) > rooted_code(tree, twin)) return std::nullopt;
    return tree;
  }

  std::size_t n_;
  std::vector<int> levels_;
  bool done_ = false;
};

inline std::vector<Tree> enumerate_trees(std::size_t n) {
  FreeTreeGenerator gen(n);
  std::vector<Tree> out;
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

/// All free trees with n_min <= n <= n_max, ordered by n then generation order.
inline std::vector<Tree> enumerate_trees(std::size_t n_min, std::size_t n_max) {
  std::vector<Tree> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    auto part = enumerate_trees(n);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace steiner
