#pragma once

// Success of projects: zero wager, and a simplified graph that is a disjoint
// union of weight-1 transpositions.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goi/project.hpp"

namespace goi {

inline constexpr double kSuccessTolerance = 1e-12;

enum class SuccessClause { NonzeroWager, NotSymmetric, CubeNotIdempotent, NonzeroTrace };

inline std::string clause_name(SuccessClause c) {
  switch (c) {
    case SuccessClause::NonzeroWager: return "wager";
    case SuccessClause::NotSymmetric: return "symmetry";
    case SuccessClause::CubeNotIdempotent: return "cube";
    case SuccessClause::NonzeroTrace: return "trace";
  }
  return "?";
}

struct SuccessVerdict {
  bool successful = true;
  std::vector<SuccessClause> reasons;
};

// With allow_fixed_points the trace clause is dropped, admitting weight-1
// loops as fixed points.
inline SuccessVerdict is_successful(const Project& a, bool allow_fixed_points = false) {
  SuccessVerdict v;
  const SimpleGraph s = simplify(a.graph());
  auto fail = [&](SuccessClause c) {
    v.successful = false;
    v.reasons.push_back(c);
  };
  if (std::abs(a.wager()) > kSuccessTolerance) fail(SuccessClause::NonzeroWager);
  if (!is_symmetric(s, kSuccessTolerance)) fail(SuccessClause::NotSymmetric);
  if (!simple_equal(graph_power(s, 3), s, kSuccessTolerance)) {
    fail(SuccessClause::CubeNotIdempotent);
  }
  if (!allow_fixed_points && std::abs(graph_trace(s)) > kSuccessTolerance) {
    fail(SuccessClause::NonzeroTrace);
  }
  return v;
}

inline bool is_transposition_union(const SimpleGraph& s) {
  std::map<Vertex, Vertex> partner;
  for (const auto& [key, w] : s.weights()) {
    const auto [v, u] = key;
    if (v == u || std::abs(w - 1.0) > kSuccessTolerance) return false;
    if (std::abs(s.weight(u, v) - 1.0) > kSuccessTolerance) return false;
    if (!partner.emplace(v, u).second) return false;
  }
  return true;
}

struct SplitResult {
  // Present when no simplified edge crosses the partition; f = left (x) right.
  std::optional<std::pair<Project, Project>> parts;
  // Otherwise a crossing edge v -> w and the test (1, {w -> v}) against it.
  std::optional<std::pair<Vertex, Vertex>> crossing;
  std::optional<Project> counter_test;
};

inline SplitResult split_successful_tensor(const Project& f, const VertexSet& a,
                                           const VertexSet& b) {
  if (!is_successful(f).successful) throw InvalidArgument("project is not successful");
  if (!disjoint(a, b) || vertex_union(a, b) != f.carrier()) {
    throw CarrierError("the two carriers must partition the carrier of the project");
  }
  SplitResult r;
  const SimpleGraph simple = simplify(f.graph());
  for (const auto& [key, w] : simple.weights()) {
    if (a.count(key.first) != a.count(key.second)) {
      r.crossing = key;
      WeightedGraph test(f.carrier());
      test.add_edge(key.second, key.first, 1.0);
      r.counter_test = Project(1.0, std::move(test));
      return r;
    }
  }
  WeightedGraph left(a), right(b);
  for (const Edge& e : f.graph().edges()) {
    (a.count(e.src) ? left : right).add_edge(e.src, e.dst, e.weight);
  }
  r.parts = std::make_pair(Project(0.0, std::move(left)), Project(0.0, std::move(right)));
  return r;
}

}  // namespace goi
