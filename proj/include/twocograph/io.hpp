// graph6 and DOT serialization.

#ifndef TWOCOGRAPH_IO_HPP
#define TWOCOGRAPH_IO_HPP

#include "twocograph/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twocograph {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& detail, std::size_t offset, std::size_t line = 0)
      : std::runtime_error("graph6: " + (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + detail +
                           " at byte " + std::to_string(offset)),
        detail_(detail),
        offset_(offset),
        line_(line) {}

  const std::string& detail() const { return detail_; }
  std::size_t offset() const { return offset_; }
  /// 1-based line within a stream, 0 for a single record.
  std::size_t line() const { return line_; }

 private:
  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record. A leading ">>graph6<<" and a trailing newline are ignored.
inline SmallGraph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty record", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte " + std::to_string(c) + " outside [63, 126]", base + i);
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    const std::size_t width = (text.size() > 1 && text[1] == 126) ? 6 : 3;
    const std::size_t start = width == 6 ? 2 : 1;
    if (text.size() < start + width) throw Graph6Error("truncated vertex count", base + text.size());
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | (text[start + i] - 63);
    pos = start + width;
  }
  if (n > kMaxVertices) throw Graph6Error("vertex count " + std::to_string(n) + " exceeds 32", base);
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw Graph6Error("expected " + std::to_string(expected) + " bytes for " + std::to_string(n) + " vertices, got " +
                          std::to_string(text.size()),
                      base + std::min(text.size(), expected));
  }
  SmallGraph g(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = text[pos + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    const int last = text[expected - 1] - 63;
    if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0) throw Graph6Error("non-zero padding bits", base + expected - 1);
  }
  return g;
}

inline std::string emit_graph6(const SmallGraph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Reads one graph per non-empty line; a ">>graph6<<" prefix on any line is accepted.
/// Parse errors carry the line number in their message.
inline std::vector<SmallGraph> read_graph6_stream(std::istream& in) {
  std::vector<SmallGraph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.detail(), e.offset(), lineno);
    }
  }
  return out;
}

enum class DotStyle { plain, green_red };

/// DOT text. green_red draws g's edges solid green and the complement's edges dashed red.
inline std::string emit_dot(const SmallGraph& g, DotStyle style = DotStyle::plain) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const std::string pair = "  " + std::to_string(u) + " -- " + std::to_string(v);
      if (g.adjacent(u, v)) {
        out += pair + (style == DotStyle::green_red ? " [color=green];\n" : ";\n");
      } else if (style == DotStyle::green_red) {
        out += pair + " [color=red, style=dashed];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_IO_HPP
