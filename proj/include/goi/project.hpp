#pragma once

// Projects (wager, graph), their interaction, orthogonality, tensor and cut,
// delocations and faxes.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "goi/graph.hpp"
#include "goi/graph_io.hpp"
#include "goi/matrix.hpp"
#include "goi/measure.hpp"
#include "goi/paths.hpp"

namespace goi {

inline constexpr double kOrthogonalityTolerance = 1e-9;

class Project {
 public:
  Project() = default;
  Project(double wager, WeightedGraph graph) : wager_(wager), graph_(std::move(graph)) {
    if (!(wager_ >= 0.0) || !std::isfinite(wager_)) {
      throw InvalidArgument("a wager is a nonnegative finite real");
    }
  }

  double wager() const noexcept { return wager_; }
  const WeightedGraph& graph() const noexcept { return graph_; }
  const VertexSet& carrier() const noexcept { return graph_.vertices(); }

 private:
  double wager_ = 0.0;
  WeightedGraph graph_;
};

// Empty carrier, empty graph, zero wager.
inline Project unit_project() { return Project{}; }

inline Project empty_project(const VertexSet& carrier, double wager = 0.0) {
  return Project(wager, WeightedGraph(carrier));
}

inline bool project_equal(const Project& a, const Project& b, double tol = kDefaultTolerance) {
  return std::abs(a.wager() - b.wager()) <= tol && graph_equal(a.graph(), b.graph(), tol);
}

inline double interaction(const Project& a, const Project& b) {
  if (a.carrier() != b.carrier()) throw CarrierError("interaction needs projects of same carrier");
  return a.wager() + b.wager() + measure_exact(a.graph(), b.graph()).value;
}

inline bool orthogonal(const Project& a, const Project& b) {
  const double v = interaction(a, b);
  return std::isfinite(v) && v > kOrthogonalityTolerance;
}

inline Project tensor(const Project& a, const Project& b) {
  for (Vertex v : vertex_intersection(a.carrier(), b.carrier())) {
    throw CarrierError("tensor needs disjoint carriers; vertex " + std::to_string(v) + " is shared");
  }
  return Project(a.wager() + b.wager(), graph_union(a.graph(), b.graph()));
}

// Wager of the cut together with the simplified exact reduction.
struct SimplifiedCut {
  double wager = 0.0;
  SimpleGraph graph;
};

inline SimplifiedCut cut_simplified(const Project& f, const Project& g) {
  const double m = measure_exact(f.graph(), g.graph()).value;
  if (std::isinf(m)) throw CutUndefinedError("the interaction of the cut is infinite");
  return {f.wager() + g.wager() + m, reduce_exact(f.graph(), g.graph())};
}

// The reduct is the full path graph when there are finitely many paths and
// the simplified exact reduct, one edge per entry, otherwise.
inline Project cut(const Project& f, const Project& g) {
  const double m = measure_exact(f.graph(), g.graph()).value;
  if (std::isinf(m)) throw CutUndefinedError("the interaction of the cut is infinite");
  const double wager = f.wager() + g.wager() + m;
  if (auto full = reduce_full(f.graph(), g.graph())) return Project(wager, std::move(*full));
  return Project(wager, as_multigraph(reduce_exact(f.graph(), g.graph())));
}

class Delocation {
 public:
  Delocation() = default;
  explicit Delocation(std::map<Vertex, Vertex> mapping) : mapping_(std::move(mapping)) {
    VertexSet image;
    for (const auto& [from, to] : mapping_) {
      if (!image.insert(to).second) {
        throw DelocationError("delocation is not injective at " + std::to_string(to));
      }
    }
  }

  static Delocation from_function(const VertexSet& domain,
                                  const std::function<Vertex(Vertex)>& fn) {
    std::map<Vertex, Vertex> m;
    for (Vertex v : domain) m[v] = fn(v);
    return Delocation(std::move(m));
  }

  const std::map<Vertex, Vertex>& mapping() const noexcept { return mapping_; }

  Vertex operator()(Vertex v) const {
    const auto it = mapping_.find(v);
    if (it == mapping_.end()) {
      throw DelocationError("vertex " + std::to_string(v) + " is not in the delocation domain");
    }
    return it->second;
  }

  VertexSet domain() const {
    VertexSet d;
    for (const auto& kv : mapping_) d.insert(kv.first);
    return d;
  }

  VertexSet image() const {
    VertexSet d;
    for (const auto& kv : mapping_) d.insert(kv.second);
    return d;
  }

 private:
  std::map<Vertex, Vertex> mapping_;
};

inline Project delocate(const Project& a, const Delocation& d) {
  return Project(a.wager(), relabel(a.graph(), [&](Vertex v) { return d(v); }));
}

// Wager 0, a weight-1 edge each way between v and d(v).
inline Project fax(const Delocation& d) {
  for (Vertex v : vertex_intersection(d.domain(), d.image())) {
    throw LocativityError("fax needs disjoint domain and image; " + std::to_string(v) +
                          " is in both");
  }
  WeightedGraph g(vertex_union(d.domain(), d.image()));
  for (const auto& [from, to] : d.mapping()) {
    g.add_edge(from, to, 1.0);
    g.add_edge(to, from, 1.0);
  }
  return Project(0.0, std::move(g));
}

inline Project parse_project(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0].text != "wager") {
    const std::size_t line = lines.empty() ? 1 : lines[0][0].line;
    throw ParseError("expected 'wager <decimal>'", line, 1);
  }
  if (lines[0].size() != 2) throw ParseError("expected 'wager <decimal>'", lines[0][0].line, 1);
  const double w = parse_decimal(lines[0][1]);
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw ParseError("wager must be nonnegative and finite", lines[0][1].line, lines[0][1].column);
  }
  return Project(w, detail::parse_graph_lines(lines, 1));
}

inline std::string write_project(const Project& a) {
  return "wager " + format_decimal(a.wager()) + "\n" + write_graph(a.graph());
}

}  // namespace goi
