#pragma once

// Text formats:
//   graph    `vertices <v>...` then `edge <src> <dst> <weight>` lines
//   project  `wager <decimal>` followed by a graph
// `#` starts a comment anywhere on a line.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "goi/error.hpp"
#include "goi/format.hpp"
#include "goi/graph.hpp"

namespace goi {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Splits text into lines of whitespace-separated tokens, dropping comments
// and blank lines.
inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back(Token{std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

inline Vertex parse_vertex(const Token& t) {
  Vertex v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a vertex number, got '" + t.text + "'", t.line, t.column);
  }
  return v;
}

inline double parse_decimal(const Token& t) {
  double x = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a decimal, got '" + t.text + "'", t.line, t.column);
  }
  return x;
}

namespace detail {

inline WeightedGraph parse_graph_lines(const std::vector<std::vector<Token>>& lines,
                                       std::size_t first) {
  if (first >= lines.size()) throw ParseError("missing 'vertices' line", 1, 1);
  const auto& header = lines[first];
  if (header[0].text != "vertices") {
    throw ParseError("expected 'vertices'", header[0].line, header[0].column);
  }
  WeightedGraph g;
  for (std::size_t i = 1; i < header.size(); ++i) g.add_vertex(parse_vertex(header[i]));
  for (std::size_t l = first + 1; l < lines.size(); ++l) {
    const auto& tok = lines[l];
    if (tok[0].text != "edge") {
      throw ParseError("expected 'edge', got '" + tok[0].text + "'", tok[0].line, tok[0].column);
    }
    if (tok.size() != 4) {
      throw ParseError("edge needs <src> <dst> <weight>", tok[0].line, tok[0].column);
    }
    const Vertex s = parse_vertex(tok[1]);
    const Vertex d = parse_vertex(tok[2]);
    const double w = parse_decimal(tok[3]);
    try {
      g.add_edge(s, d, w);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), tok[0].line, tok[0].column);
    }
  }
  return g;
}

}  // namespace detail

inline WeightedGraph parse_graph(std::string_view text) {
  return detail::parse_graph_lines(tokenize_lines(text), 0);
}

inline std::string write_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "vertices";
  for (Vertex v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << e.src << ' ' << e.dst << ' ' << format_decimal(e.weight) << '\n';
  }
  return out.str();
}

// One edge line per weight entry, in vertex-pair order; may print "inf".
inline std::string write_graph(const SimpleGraph& s) {
  std::ostringstream out;
  out << "vertices";
  for (Vertex v : s.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& [key, w] : s.weights()) {
    out << "edge " << key.first << ' ' << key.second << ' ' << format_decimal(w) << '\n';
  }
  return out.str();
}

inline std::string write_dot(const WeightedGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v : g.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.src << " -> " << e.dst << " [label=\"" << format_decimal(e.weight)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string write_dot(const SimpleGraph& s, const std::string& name = "G") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v : s.vertices()) out << "  " << v << ";\n";
  for (const auto& [key, w] : s.weights()) {
    out << "  " << key.first << " -> " << key.second << " [label=\"" << format_decimal(w)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// Edges carry `plug=0|1` plus a matching stroke colour.
inline std::string write_dot(const ColoredGraph& p, const std::string& name = "G") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v : p.underlying.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : p.underlying.edges()) {
    const int c = p.color_of(e.id);
    out << "  " << e.src << " -> " << e.dst << " [label=\"" << format_decimal(e.weight)
        << "\", plug=" << c << ", color=\"" << (c == 0 ? "blue" : "red") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace goi
