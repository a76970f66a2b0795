#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Vertex = std::uint32_t;

/// Strictly increasing list of vertex ids. Used for terminal sets and witnesses.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;

  /// Sorts the input; duplicates are rejected rather than merged.
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      fail(Errc::bad_vertex, "duplicate vertex in set");
  }

  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  VertexSet with(Vertex v) const {
    if (contains(v)) return *this;
    VertexSet out = *this;
    out.members_.insert(std::lower_bound(out.members_.begin(), out.members_.end(), v), v);
    return out;
  }

  VertexSet without(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it != out.members_.end() && *it == v) out.members_.erase(it);
    return out;
  }

  /// Throws BadVertex unless every member is below `order`.
  void check_bounds(std::size_t order) const {
    if (!members_.empty() && members_.back() >= order)
      fail(Errc::bad_vertex, "vertex " + std::to_string(members_.back()) + " out of range for order " +
                                 std::to_string(order));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(members_[i]);
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << '{' << s.to_string() << '}'; }

 private:
  std::vector<Vertex> members_;
};

}  // namespace steiner
