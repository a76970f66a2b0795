#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "steiner/vertex_set.hpp"

namespace steiner {

/// Binomial coefficient, saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    result = result * num / i;
  }
  return result;
}

/// Visits every k-subset of `pool` in lexicographic order of positions.
/// The visitor receives the chosen elements (sorted if `pool` is sorted).
template <class Visitor>
void for_each_combination(std::span<const Vertex> pool, std::size_t k, Visitor&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::vector<Vertex> chosen(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    visit(std::span<const Vertex>(chosen));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// k-subsets of {0, ..., n-1}.
template <class Visitor>
void for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
  for_each_combination(std::span<const Vertex>(pool), k, std::forward<Visitor>(visit));
}

}  // namespace steiner
