#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "steiner/error.hpp"

namespace steiner {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including q == 1.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(Errc::bad_spec, "not a rational: '" + text + "'");
  }
}

}  // namespace steiner
