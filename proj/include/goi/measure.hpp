#pragma once

// The measurement <G,H> = sum over 1-circuits of -log(1 - w), computed by
// circuit enumeration (truncated) and by -log det(1 - M_G M_H) (exact).

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goi/graph.hpp"
#include "goi/matrix.hpp"
#include "goi/paths.hpp"

namespace goi {

enum class Route { enumeration, logdet };

inline std::string route_name(Route r) { return r == Route::enumeration ? "enum" : "exact"; }

struct Truncation {
  std::size_t max_len = 0;
  bool lower_bound = false;  // longer circuits may exist
};

struct Measurement {
  double value = 0.0;
  Route route = Route::logdet;
  std::optional<Truncation> truncation;

  bool infinite() const { return std::isinf(value); }
  bool truncated() const { return truncation && truncation->lower_bound; }
};

inline double circuit_measure(double weight) {
  if (weight >= 1.0) return kInfinity;
  return -std::log1p(-weight);
}

inline Measurement measure_truncated(const WeightedGraph& g, const WeightedGraph& h,
                                     std::size_t max_len) {
  const ColoredGraph plugged = plug(g, h);
  const CircuitCensus census = circuit_census(AlternationGraph(plugged));
  Measurement m{0.0, Route::enumeration,
                Truncation{max_len, !census.finite || census.max_length > max_len}};
  for (const Circuit& c : one_circuits(plugged, max_len)) {
    m.value += circuit_measure(c.weight);
    if (m.infinite()) break;
  }
  return m;
}

// Over the union carrier; exactly 0 when the plugging has no alternating
// cycle at all.
inline double simple_measure(const SimpleGraph& g, const SimpleGraph& h) {
  const VertexSet carrier = vertex_union(g.vertices(), h.vertices());
  const LocalizedMatrix product = adjacency_matrix(g, carrier) * adjacency_matrix(h, carrier);
  bool nilpotent = true;
  for (const auto& block : detail::support_blocks(product)) {
    if (!block.empty()) nilpotent = false;
  }
  if (nilpotent) return 0.0;
  return log_det_one_minus(product);
}

inline Measurement measure_exact(const WeightedGraph& g, const WeightedGraph& h) {
  return Measurement{simple_measure(simplify(g), simplify(h)), Route::logdet, std::nullopt};
}

inline bool measures_agree(double lhs, const std::vector<double>& terms, double tol = 1e-9) {
  double rhs = 0.0;
  bool any_inf = false;
  bool large = std::abs(lhs) >= 10.0;
  for (double t : terms) {
    if (std::isinf(t)) any_inf = true;
    rhs += t;
    if (std::abs(t) >= 10.0) large = true;
  }
  if (std::isinf(lhs) || any_inf) return std::isinf(lhs) && any_inf;
  const double diff = std::abs(lhs - rhs);
  return large ? diff <= tol * std::max(std::abs(lhs), std::abs(rhs)) : diff <= tol;
}

struct AdjunctionReport {
  Measurement whole;    // <F, G u H>
  Measurement first;    // <F, G>
  Measurement reduced;  // <F::G, H>
  bool holds = false;
};

namespace detail {

inline void require_adjunction_carriers(const VertexSet& f, const VertexSet& g,
                                        const VertexSet& h) {
  for (Vertex v : vertex_intersection(g, h)) {
    throw CarrierError("vertex " + std::to_string(v) + " is shared by G and H");
  }
  for (Vertex v : vertex_difference(vertex_union(g, h), f)) {
    throw CarrierError("vertex " + std::to_string(v) + " is outside the carrier of F");
  }
}

}  // namespace detail

inline AdjunctionReport check_adjunction(const WeightedGraph& f, const WeightedGraph& g,
                                         const WeightedGraph& h) {
  detail::require_adjunction_carriers(f.vertices(), g.vertices(), h.vertices());
  AdjunctionReport r;
  r.whole = measure_exact(f, graph_union(g, h));
  r.first = measure_exact(f, g);
  if (r.first.infinite()) {
    r.reduced = Measurement{kInfinity, Route::logdet, std::nullopt};
  } else {
    r.reduced = measure_exact(as_multigraph(reduce_exact(f, g)), h);
  }
  r.holds = measures_agree(r.whole.value, {r.first.value, r.reduced.value});
  return r;
}

// Same identity on simple graphs, all terms through log det; H is the
// feedback solution of F and G1.
inline AdjunctionReport check_matrix_adjunction(const SimpleGraph& f, const SimpleGraph& g1,
                                                const SimpleGraph& g2) {
  detail::require_adjunction_carriers(f.vertices(), g1.vertices(), g2.vertices());
  SimpleGraph both(vertex_union(g1.vertices(), g2.vertices()));
  for (const auto& [key, w] : g1.weights()) both.set(key.first, key.second, w);
  for (const auto& [key, w] : g2.weights()) both.set(key.first, key.second, w);
  AdjunctionReport r;
  r.whole.value = simple_measure(f, both);
  r.first.value = simple_measure(f, g1);
  r.reduced.value = r.first.infinite() ? kInfinity : simple_measure(feedback_solve(f, g1), g2);
  r.holds = measures_agree(r.whole.value, {r.first.value, r.reduced.value});
  return r;
}

struct InvarianceReport {
  Measurement exact;
  Measurement exact_simplified;
  std::vector<Measurement> enumerated;  // max_len = 2, 4, ..., L
  bool exact_agrees = false;
  bool monotone_lower_bounds = false;
  bool enumeration_agrees = true;  // only meaningful when the last level is untruncated
  bool holds() const { return exact_agrees && monotone_lower_bounds && enumeration_agrees; }
};

inline InvarianceReport check_simplify_invariance(const WeightedGraph& g, const WeightedGraph& h,
                                                  std::size_t max_len, double tol = 1e-9) {
  if (max_len < 2) throw InvalidArgument("max_len must be at least 2");
  InvarianceReport r;
  r.exact = measure_exact(g, h);
  r.exact_simplified = measure_exact(g, as_multigraph(simplify(h)));
  r.exact_agrees = measures_agree(r.exact.value, {r.exact_simplified.value}, tol);

  r.monotone_lower_bounds = true;
  double previous = 0.0;
  for (std::size_t l = 2; l <= max_len; l += 2) {
    Measurement m = measure_truncated(g, h, l);
    if (m.value + tol < previous) r.monotone_lower_bounds = false;
    if (!r.exact.infinite() && m.value > r.exact.value + tol) r.monotone_lower_bounds = false;
    previous = m.value;
    r.enumerated.push_back(m);
  }
  if (!r.enumerated.empty() && !r.enumerated.back().truncated()) {
    r.enumeration_agrees = measures_agree(r.exact.value, {r.enumerated.back().value}, tol);
  }
  return r;
}

}  // namespace goi
