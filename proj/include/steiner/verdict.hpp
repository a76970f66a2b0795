#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steiner/rational.hpp"
#include "steiner/vertex_set.hpp"

namespace steiner {

/// Outcome of checking one inequality `lhs <= rhs` on one instance.
struct Verdict {
  std::string suite;
  std::string code;    // canonical code of the instance (trees only)
  std::string graph6;
  int n = 0;
  int k = 0;
  int kprime = 0;
  Rational lhs;
  Rational rhs;
  bool holds = true;
  bool equality = false;
  std::vector<std::pair<std::string, VertexSet>> witnesses;
  std::vector<std::pair<std::string, std::int64_t>> values;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Sets `holds` and `equality` from an exact comparison.
inline Verdict& settle(Verdict& v, Rational lhs, Rational rhs) {
  v.lhs = lhs;
  v.rhs = rhs;
  v.holds = lhs <= rhs;
  v.equality = lhs == rhs;
  return v;
}

}  // namespace steiner
