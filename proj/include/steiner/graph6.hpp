#pragma once

// graph6 interchange format: a size header followed by the upper triangle of
// the adjacency matrix, column by column, six bits per printable character
// (value + 63).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/tree.hpp"

namespace steiner {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

}  // namespace detail

inline std::string graph6_encode(const EdgeList& list) {
  std::string out;
  const std::size_t n = list.n;
  detail::append_size(out, n);
  // column j holds the lower endpoints i < j adjacent to j
  std::vector<std::vector<char>> column(n);
  for (std::size_t j = 0; j < n; ++j) column[j].assign(j, 0);
  for (const Edge& e : list.edges) {
    if (e.v >= n) fail(Errc::bad_vertex, "edge endpoint " + std::to_string(e.v) + " >= order " + std::to_string(n));
    column[e.v][e.u] = 1;
  }
  int value = 0, bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | column[j][i];
      if (++bits == 6) {
        out += static_cast<char>(value + 63);
        value = bits = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((value << (6 - bits)) + 63);
  return out;
}

inline std::string graph6_encode(const Graph& g) { return graph6_encode(g.edge_list()); }
inline std::string graph6_encode(const Tree& t) { return graph6_encode(t.edge_list()); }

/// Decodes one line (a trailing CR/LF and a leading ">>graph6<<" are
/// tolerated). Throws MalformedGraph6 with the offending byte offset.
inline EdgeList graph6_decode(std::string_view line) {
  std::size_t offset = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) offset = kGraph6Header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  auto bad = [&](std::size_t at, const std::string& why) -> void {
    fail(Errc::malformed_graph6, why + " at byte " + std::to_string(at));
  };
  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= line.size()) bad(at, "unexpected end of line");
    const auto c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126) bad(at, "character outside graph6 range");
    return c - 63;
  };

  std::uint64_t n = 0;
  std::size_t pos = offset;
  if (pos >= line.size()) bad(pos, "empty graph6 line");
  if (line[pos] != '~') {
    n = sextet(pos++);
  } else if (pos + 1 < line.size() && line[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  }
  if (n > (1u << 16)) bad(offset, "graph order " + std::to_string(n) + " exceeds supported size");

  const std::uint64_t bit_count = n * (n - (n > 0)) / 2;
  const std::size_t body = (bit_count + 5) / 6;
  if (line.size() != pos + body)
    bad(std::min(line.size(), pos + body),
        "expected " + std::to_string(body) + " adjacency bytes, found " + std::to_string(line.size() - pos));

  EdgeList out;
  out.n = static_cast<std::size_t>(n);
  std::uint64_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      if ((sextet(at) >> (5 - bit % 6)) & 1) out.edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  for (; bit < body * 6; ++bit)
    if ((sextet(pos + bit / 6) >> (5 - bit % 6)) & 1) bad(pos + bit / 6, "non-zero padding bit");
  return out;
}

/// One entry per non-empty line; `name` prefixes error positions.
inline std::vector<EdgeList> read_graph6_stream(std::istream& in, const std::string& name) {
  std::vector<EdgeList> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const Error& e) {
      fail(e.code(), name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

/// "-" reads standard input.
inline std::vector<EdgeList> read_graph6_file(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return read_graph6_stream(in, path);
}

}  // namespace steiner
