#pragma once

// graph6 encoding: a size header N(n) followed by the upper triangle of the
// adjacency matrix in column-major order, six bits per printable byte
// (value + 63), zero-padded to a multiple of six.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kfree/error.hpp"
#include "kfree/graph.hpp"

namespace kfree {

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  auto value_at = [&](std::size_t pos) {
    if (pos >= text.size()) throw ParseError("truncated graph6 record", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    return c - 63;
  };

  if (text.empty()) throw ParseError("empty graph6 record", 0);
  std::size_t pos = 0;
  int n = value_at(0);
  if (n == 63) {
    if (text.size() > 1 && text[1] == '~')
      throw ParseError("graph6 header for n >= 258048 exceeds the 64-vertex limit", 1);
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    if (n < 63) throw ParseError("non-canonical long graph6 header", 0);
    pos = 4;
  } else {
    pos = 1;
  }
  if (n > kMaxVertices)
    throw ParseError("graph order " + std::to_string(n) + " exceeds 64", 0);

  const std::size_t bits = static_cast<std::size_t>(pair_count(n));
  const std::size_t payload = (bits + 5) / 6;
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = value_at(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = value_at(pos + payload - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", pos + payload - 1);
  }
  if (text.size() > pos + payload)
    throw ParseError("trailing bytes after graph6 record", pos + payload);
  return b.build();
}

/// Reads one graph per line, skipping blank lines. Errors carry the line's
/// byte offset within the stream added to the in-record offset.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t base = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    const std::size_t consumed = line.size() + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("malformed graph6 record on line " + std::to_string(line_no),
                         base + e.offset());
      }
    }
    base += consumed;
  }
  return out;
}

}  // namespace kfree
