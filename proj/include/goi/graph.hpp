#pragma once

// Finite directed weighted multigraphs located on sets of naturals, their
// simple (parallel-edge-summed) form, and the elementary operations on both.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goi/error.hpp"

namespace goi {

using Vertex = std::uint64_t;
using VertexSet = std::set<Vertex>;
using EdgeId = std::size_t;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  EdgeId id = 0;
  Vertex src = 0;
  Vertex dst = 0;
  double weight = 1.0;
};

// G = (V, E, s, t, w). Edge ids are the positions in edges(), so they are
// unique and dense. Weights are positive and finite; base graphs keep them
// in (0,1], while graphs rebuilt from simplified forms may exceed 1.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(VertexSet vertices) : vertices_(std::move(vertices)) {}

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool contains(Vertex v) const { return vertices_.count(v) != 0; }

  void add_vertex(Vertex v) { vertices_.insert(v); }

  EdgeId add_edge(Vertex src, Vertex dst, double weight) {
    if (!contains(src) || !contains(dst)) {
      throw InvalidArgument("edge " + std::to_string(src) + "->" + std::to_string(dst) +
                            " has an endpoint outside the vertex set");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw InvalidArgument("edge weight must be positive and finite");
    }
    const EdgeId id = edges_.size();
    edges_.push_back(Edge{id, src, dst, weight});
    return id;
  }

  // True when every weight lies in (0,1].
  bool has_unit_bounded_weights() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight <= 1.0; });
  }

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

// At most one weight per ordered pair; weights are positive and may be +inf.
class SimpleGraph {
 public:
  using Key = std::pair<Vertex, Vertex>;
  using WeightMap = std::map<Key, double>;

  SimpleGraph() = default;
  explicit SimpleGraph(VertexSet vertices) : vertices_(std::move(vertices)) {}

  const VertexSet& vertices() const noexcept { return vertices_; }
  const WeightMap& weights() const noexcept { return weights_; }
  bool contains(Vertex v) const { return vertices_.count(v) != 0; }

  void add_vertex(Vertex v) { vertices_.insert(v); }

  // Adds w to the weight of (src,dst), creating the entry if needed.
  void accumulate(Vertex src, Vertex dst, double w) {
    if (!contains(src) || !contains(dst)) {
      throw InvalidArgument("weight entry " + std::to_string(src) + "->" + std::to_string(dst) +
                            " lies outside the vertex set");
    }
    if (!(w > 0.0)) throw InvalidArgument("simple graph weights must be positive");
    weights_[{src, dst}] += w;
  }

  void set(Vertex src, Vertex dst, double w) {
    if (!contains(src) || !contains(dst)) {
      throw InvalidArgument("weight entry lies outside the vertex set");
    }
    if (!(w > 0.0)) throw InvalidArgument("simple graph weights must be positive");
    weights_[{src, dst}] = w;
  }

  double weight(Vertex src, Vertex dst) const {
    const auto it = weights_.find({src, dst});
    return it == weights_.end() ? 0.0 : it->second;
  }

 private:
  VertexSet vertices_;
  WeightMap weights_;
};

// A plugging G□H: the union graph plus the origin colour of every edge
// (0 for edges of G, 1 for edges of H), indexed by edge id.
struct ColoredGraph {
  WeightedGraph underlying;
  std::vector<std::uint8_t> color;

  std::uint8_t color_of(EdgeId e) const { return color.at(e); }
};

inline VertexSet vertex_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline VertexSet vertex_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline VertexSet vertex_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  return vertex_intersection(a, b).empty();
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Union of vertex sets, disjoint union of edges. Edges of G keep their ids,
// edges of H are renumbered after them.
inline WeightedGraph graph_union(const WeightedGraph& g, const WeightedGraph& h) {
  WeightedGraph out(vertex_union(g.vertices(), h.vertices()));
  for (const Edge& e : g.edges()) out.add_edge(e.src, e.dst, e.weight);
  for (const Edge& e : h.edges()) out.add_edge(e.src, e.dst, e.weight);
  return out;
}

inline ColoredGraph plug(const WeightedGraph& g, const WeightedGraph& h) {
  ColoredGraph out{graph_union(g, h), {}};
  out.color.assign(g.edge_count(), 0);
  out.color.resize(g.edge_count() + h.edge_count(), 1);
  return out;
}

inline SimpleGraph simplify(const WeightedGraph& g) {
  SimpleGraph out(g.vertices());
  for (const Edge& e : g.edges()) out.accumulate(e.src, e.dst, e.weight);
  return out;
}

// One edge per weight entry. Infinite entries have no multigraph form.
inline WeightedGraph as_multigraph(const SimpleGraph& s) {
  WeightedGraph out(s.vertices());
  for (const auto& [key, w] : s.weights()) {
    if (!std::isfinite(w)) throw TotalityError("simple graph is not total");
    out.add_edge(key.first, key.second, w);
  }
  return out;
}

inline bool is_total(const SimpleGraph& s) {
  return std::all_of(s.weights().begin(), s.weights().end(),
                     [](const auto& kv) { return std::isfinite(kv.second); });
}

// Sum of loop weights.
inline double graph_trace(const SimpleGraph& s) {
  double total = 0.0;
  for (const auto& [key, w] : s.weights()) {
    if (key.first == key.second) total += w;
  }
  return total;
}

inline double graph_trace(const WeightedGraph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) total += e.weight;
  }
  return total;
}

// Graph of paths of length k: the k-fold composition of the weight map.
inline SimpleGraph graph_power(const SimpleGraph& s, std::size_t k) {
  if (k == 0) throw InvalidArgument("graph_power requires k >= 1");
  std::map<Vertex, std::vector<std::pair<Vertex, double>>> out_edges;
  for (const auto& [key, w] : s.weights()) out_edges[key.first].emplace_back(key.second, w);

  SimpleGraph current = s;
  for (std::size_t step = 1; step < k; ++step) {
    SimpleGraph next(s.vertices());
    for (const auto& [key, w] : current.weights()) {
      const auto it = out_edges.find(key.second);
      if (it == out_edges.end()) continue;
      for (const auto& [dst, w2] : it->second) next.accumulate(key.first, dst, w * w2);
    }
    current = std::move(next);
  }
  return current;
}

inline bool weights_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol;
}

// Absent entries count as weight 0.
inline bool simple_equal(const SimpleGraph& a, const SimpleGraph& b, double tol) {
  if (a.vertices() != b.vertices()) return false;
  for (const auto& [key, w] : a.weights()) {
    if (!weights_close(w, b.weight(key.first, key.second), tol)) return false;
  }
  for (const auto& [key, w] : b.weights()) {
    if (!weights_close(w, a.weight(key.first, key.second), tol)) return false;
  }
  return true;
}

inline bool is_symmetric(const SimpleGraph& s, double tol = kDefaultTolerance) {
  for (const auto& [key, w] : s.weights()) {
    if (!weights_close(w, s.weight(key.second, key.first), tol)) return false;
  }
  return true;
}

// Locative equality: identical vertex sets and equal edge multisets of
// (src, dst, weight), weights compared within tol. Edge ids are ignored.
inline bool graph_equal(const WeightedGraph& a, const WeightedGraph& b,
                        double tol = kDefaultTolerance) {
  if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
  if (a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return false;
  std::map<std::pair<Vertex, Vertex>, std::vector<double>> wa, wb;
  for (const Edge& e : a.edges()) wa[{e.src, e.dst}].push_back(e.weight);
  for (const Edge& e : b.edges()) wb[{e.src, e.dst}].push_back(e.weight);
  if (wa.size() != wb.size()) return false;
  for (auto& [key, weights] : wa) {
    auto it = wb.find(key);
    if (it == wb.end() || it->second.size() != weights.size()) return false;
    std::sort(weights.begin(), weights.end());
    std::sort(it->second.begin(), it->second.end());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (std::abs(weights[i] - it->second[i]) > tol) return false;
    }
  }
  return true;
}

// Relabels vertices through an injective map defined on every vertex.
template <typename Map>
WeightedGraph relabel(const WeightedGraph& g, const Map& mapping) {
  WeightedGraph out;
  for (Vertex v : g.vertices()) out.add_vertex(mapping(v));
  if (out.vertices().size() != g.vertices().size()) {
    throw DelocationError("relabelling is not injective on the vertex set");
  }
  for (const Edge& e : g.edges()) out.add_edge(mapping(e.src), mapping(e.dst), e.weight);
  return out;
}

}  // namespace goi
