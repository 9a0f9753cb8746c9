#pragma once

// Alternating paths and 1-circuits of a plugging, and the reduction G::H.
//
// Everything here runs on the alternation graph of a plugging: its states
// are the edges, and e -> f is a step when t(e) = s(f) and the colours of e
// and f differ. Alternating paths are walks in that graph, alternating
// cycles are its closed walks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "goi/graph.hpp"

namespace goi {

struct Path {
  std::vector<EdgeId> edges;
  Vertex source = 0;
  Vertex target = 0;
  double weight = 1.0;

  std::size_t length() const { return edges.size(); }
};

struct Circuit {
  std::vector<EdgeId> edges;  // canonical rotation
  double weight = 1.0;

  std::size_t length() const { return edges.size(); }
};

class AlternationGraph {
 public:
  explicit AlternationGraph(const ColoredGraph& plugged) : g_(&plugged) {
    const auto& edges = plugged.underlying.edges();
    std::map<Vertex, std::vector<EdgeId>> leaving;
    for (const Edge& e : edges) leaving[e.src].push_back(e.id);
    next_.resize(edges.size());
    for (const Edge& e : edges) {
      const auto it = leaving.find(e.dst);
      if (it == leaving.end()) continue;
      for (EdgeId f : it->second) {
        if (plugged.color_of(f) != plugged.color_of(e.id)) next_[e.id].push_back(f);
      }
    }
    compute_components();
  }

  const ColoredGraph& plugging() const { return *g_; }
  const Edge& edge(EdgeId e) const { return g_->underlying.edges()[e]; }
  std::size_t size() const { return next_.size(); }
  const std::vector<EdgeId>& next(EdgeId e) const { return next_[e]; }

  std::size_t component(EdgeId e) const { return component_[e]; }
  std::size_t component_count() const { return component_size_.size(); }
  std::size_t component_size(std::size_t c) const { return component_size_[c]; }
  // Number of steps inside the component.
  std::size_t component_steps(std::size_t c) const { return component_steps_[c]; }

  // A component lies on some cycle iff it has an internal step. It carries a
  // single primitive cycle iff it has exactly as many steps as states.
  bool cyclic(std::size_t c) const { return component_steps_[c] > 0; }
  bool simple_cycle(std::size_t c) const {
    return component_steps_[c] > 0 && component_steps_[c] == component_size_[c];
  }

 private:
  void compute_components() {
    const std::size_t n = next_.size();
    component_.assign(n, kUnset);
    std::vector<std::size_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<EdgeId> stack;
    std::size_t counter = 0;

    std::function<void(EdgeId)> visit = [&](EdgeId v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (EdgeId w : next_[v]) {
        if (index[w] == kUnset) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        const std::size_t c = component_size_.size();
        component_size_.push_back(0);
        EdgeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component_[w] = c;
          ++component_size_[c];
        } while (w != v);
      }
    };
    for (EdgeId v = 0; v < n; ++v) {
      if (index[v] == kUnset) visit(v);
    }
    component_steps_.assign(component_size_.size(), 0);
    for (EdgeId v = 0; v < n; ++v) {
      for (EdgeId w : next_[v]) {
        if (component_[v] == component_[w]) ++component_steps_[component_[v]];
      }
    }
  }

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  const ColoredGraph* g_;
  std::vector<std::vector<EdgeId>> next_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> component_size_;
  std::vector<std::size_t> component_steps_;
};

// Exact shape of the set of 1-circuits: finite iff every cyclic component of
// the alternation graph is one simple cycle, in which case each such
// component is exactly one circuit.
struct CircuitCensus {
  bool finite = true;
  std::size_t count = 0;       // meaningful when finite
  std::size_t max_length = 0;  // meaningful when finite
};

inline CircuitCensus circuit_census(const AlternationGraph& alt) {
  CircuitCensus out;
  for (std::size_t c = 0; c < alt.component_count(); ++c) {
    if (!alt.cyclic(c)) continue;
    if (!alt.simple_cycle(c)) {
      out.finite = false;
      continue;
    }
    ++out.count;
    out.max_length = std::max(out.max_length, alt.component_size(c));
  }
  return out;
}

inline CircuitCensus circuit_census(const WeightedGraph& g, const WeightedGraph& h) {
  const ColoredGraph p = plug(g, h);
  return circuit_census(AlternationGraph(p));
}

// Shape of the set of alternating paths from sources to targets.
struct PathCensus {
  bool finite = true;
  std::size_t max_length = 0;  // meaningful when finite; 0 when no path exists
};

inline PathCensus path_census(const AlternationGraph& alt, const VertexSet& from,
                              const VertexSet& to) {
  const std::size_t n = alt.size();
  std::vector<bool> forward(n, false), backward(n, false);
  std::vector<std::vector<EdgeId>> prev(n);
  for (EdgeId e = 0; e < n; ++e) {
    for (EdgeId f : alt.next(e)) prev[f].push_back(e);
  }
  auto flood = [](std::vector<bool>& mark, std::vector<EdgeId> frontier,
                  const std::function<const std::vector<EdgeId>&(EdgeId)>& step) {
    for (EdgeId e : frontier) mark[e] = true;
    while (!frontier.empty()) {
      const EdgeId e = frontier.back();
      frontier.pop_back();
      for (EdgeId f : step(e)) {
        if (!mark[f]) {
          mark[f] = true;
          frontier.push_back(f);
        }
      }
    }
  };
  std::vector<EdgeId> starts, ends;
  for (EdgeId e = 0; e < n; ++e) {
    if (from.count(alt.edge(e).src)) starts.push_back(e);
    if (to.count(alt.edge(e).dst)) ends.push_back(e);
  }
  flood(forward, starts, [&](EdgeId e) -> const std::vector<EdgeId>& { return alt.next(e); });
  flood(backward, ends, [&](EdgeId e) -> const std::vector<EdgeId>& { return prev[e]; });

  PathCensus out;
  for (EdgeId e = 0; e < n; ++e) {
    if (forward[e] && backward[e] && alt.cyclic(alt.component(e))) {
      out.finite = false;
      return out;
    }
  }
  // The useful states now form a DAG; longest path by memoised search.
  std::vector<std::size_t> longest(n, 0);
  std::vector<bool> done(n, false);
  std::function<std::size_t(EdgeId)> solve = [&](EdgeId e) -> std::size_t {
    if (done[e]) return longest[e];
    std::size_t best = to.count(alt.edge(e).dst) ? 1 : 0;
    for (EdgeId f : alt.next(e)) {
      if (!backward[f]) continue;
      best = std::max(best, 1 + solve(f));
    }
    done[e] = true;
    return longest[e] = best;
  };
  for (EdgeId e : starts) {
    if (backward[e]) out.max_length = std::max(out.max_length, solve(e));
  }
  return out;
}

namespace detail {

inline Path make_path(const AlternationGraph& alt, const std::vector<EdgeId>& edges) {
  Path p;
  p.edges = edges;
  p.source = alt.edge(edges.front()).src;
  p.target = alt.edge(edges.back()).dst;
  for (EdgeId e : edges) p.weight *= alt.edge(e).weight;
  return p;
}

}  // namespace detail

// Alternating paths of length <= max_len from `from` to `to`, in
// lexicographic order of their edge-id sequences.
inline std::vector<Path> alternating_paths(const ColoredGraph& plugged, const VertexSet& from,
                                           const VertexSet& to, std::size_t max_len) {
  if (max_len < 1) throw InvalidArgument("max_len must be at least 1");
  const AlternationGraph alt(plugged);
  std::vector<Path> out;
  std::vector<EdgeId> current;
  std::function<void(EdgeId)> extend = [&](EdgeId e) {
    current.push_back(e);
    if (to.count(alt.edge(e).dst)) out.push_back(detail::make_path(alt, current));
    if (current.size() < max_len) {
      for (EdgeId f : alt.next(e)) extend(f);
    }
    current.pop_back();
  };
  for (const Edge& e : plugged.underlying.edges()) {
    if (from.count(e.src)) extend(e.id);
  }
  return out;
}

inline std::vector<Path> alternating_paths(const WeightedGraph& g, const WeightedGraph& h,
                                           const VertexSet& from, const VertexSet& to,
                                           std::size_t max_len) {
  return alternating_paths(plug(g, h), from, to, max_len);
}

namespace detail {

inline bool is_canonical_and_primitive(const std::vector<EdgeId>& cyc) {
  const std::size_t n = cyc.size();
  for (std::size_t r = 1; r < n; ++r) {
    bool equal = true;
    bool smaller = false;
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeId a = cyc[(r + i) % n];
      if (a != cyc[i]) {
        equal = false;
        smaller = a < cyc[i];
        break;
      }
    }
    if (equal) return false;               // a proper power
    if (smaller && r % 2 == 0) return false;  // a smaller even rotation exists
  }
  return true;
}

}  // namespace detail

// 1-circuits of length <= max_len, each once through its canonical rotation,
// ordered by that rotation.
inline std::vector<Circuit> one_circuits(const ColoredGraph& plugged, std::size_t max_len) {
  if (max_len < 2 || max_len % 2 != 0) throw InvalidArgument("max_len must be even and >= 2");
  const AlternationGraph alt(plugged);
  std::vector<Circuit> out;
  std::vector<EdgeId> current;
  EdgeId first = 0;
  std::function<void(EdgeId)> extend = [&](EdgeId e) {
    current.push_back(e);
    const bool closes = std::find(alt.next(e).begin(), alt.next(e).end(), first) !=
                        alt.next(e).end();
    if (closes && detail::is_canonical_and_primitive(current)) {
      Circuit c{current, 1.0};
      for (EdgeId x : current) c.weight *= alt.edge(x).weight;
      out.push_back(std::move(c));
    }
    if (current.size() < max_len) {
      for (EdgeId f : alt.next(e)) {
        if (plugged.color_of(f) == 0 && f < first) continue;
        extend(f);
      }
    }
    current.pop_back();
  };
  for (const Edge& e : plugged.underlying.edges()) {
    if (plugged.color_of(e.id) != 0) continue;
    first = e.id;
    extend(e.id);
  }
  return out;
}

inline std::vector<Circuit> one_circuits(const WeightedGraph& g, const WeightedGraph& h,
                                         std::size_t max_len) {
  return one_circuits(plug(g, h), max_len);
}

struct Reduction {
  WeightedGraph graph;
  // Some alternating path between the outer vertices is longer than the bound.
  bool truncated = false;
};

// G::H restricted to paths of length <= max_len. Edges appear in the
// lexicographic order of the paths they stand for.
inline Reduction reduce_truncated(const WeightedGraph& g, const WeightedGraph& h,
                                  std::size_t max_len) {
  const VertexSet outer = symmetric_difference(g.vertices(), h.vertices());
  const ColoredGraph plugged = plug(g, h);
  Reduction out{WeightedGraph(outer), false};
  for (const Path& p : alternating_paths(plugged, outer, outer, max_len)) {
    out.graph.add_edge(p.source, p.target, p.weight);
  }
  const PathCensus census = path_census(AlternationGraph(plugged), outer, outer);
  out.truncated = !census.finite || census.max_length > max_len;
  return out;
}

// The full reduction, when it is finite.
inline std::optional<WeightedGraph> reduce_full(const WeightedGraph& g, const WeightedGraph& h) {
  const VertexSet outer = symmetric_difference(g.vertices(), h.vertices());
  const ColoredGraph plugged = plug(g, h);
  const PathCensus census = path_census(AlternationGraph(plugged), outer, outer);
  if (!census.finite) return std::nullopt;
  return reduce_truncated(g, h, std::max<std::size_t>(census.max_length, 1)).graph;
}

}  // namespace goi
