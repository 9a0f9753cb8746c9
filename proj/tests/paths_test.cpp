#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "goi/paths.hpp"
#include "goi/random.hpp"

using namespace goi;

namespace {

WeightedGraph fig1_f() {
  WeightedGraph f(VertexSet{1, 2, 3, 4});
  f.add_edge(1, 2, 1.0);  // a = 0
  f.add_edge(2, 4, 1.0);  // b = 1
  f.add_edge(4, 3, 1.0);  // c = 2
  f.add_edge(3, 1, 1.0);  // d = 3
  return f;
}

WeightedGraph fig1_g() {
  WeightedGraph g(VertexSet{1, 2});
  g.add_edge(1, 1, 1.0);  // g1 = 4 after plugging
  g.add_edge(2, 2, 1.0);  // g2 = 5
  return g;
}

WeightedGraph fig1_h() {
  WeightedGraph h(VertexSet{1, 2});
  h.add_edge(1, 2, 1.0);  // h1 = 4
  h.add_edge(2, 1, 1.0);  // h2 = 5
  return h;
}

WeightedGraph loop(Vertex v, double w) {
  WeightedGraph g(VertexSet{v});
  g.add_edge(v, v, w);
  return g;
}

// Brute-force alternating cycles of exactly length n (as edge sequences,
// every rotation listed), over the plugging.
std::vector<std::vector<EdgeId>> all_cycles(const ColoredGraph& p, std::size_t n) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> cur;
  const auto& edges = p.underlying.edges();
  std::function<void()> go = [&] {
    if (cur.size() == n) {
      const Edge& last = edges[cur.back()];
      const Edge& first = edges[cur.front()];
      if (last.dst == first.src && p.color_of(last.id) != p.color_of(first.id)) out.push_back(cur);
      return;
    }
    for (const Edge& e : edges) {
      if (!cur.empty()) {
        const Edge& prev = edges[cur.back()];
        if (prev.dst != e.src || p.color_of(prev.id) == p.color_of(e.id)) continue;
      }
      cur.push_back(e.id);
      go();
      cur.pop_back();
    }
  };
  go();
  return out;
}

}  // namespace

TEST(Paths, Fig1PathFromThreeToFour) {
  const auto paths = alternating_paths(fig1_f(), fig1_g(), VertexSet{3}, VertexSet{4}, 5);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].edges, (std::vector<EdgeId>{3, 4, 0, 5, 1}));
  EXPECT_EQ(paths[0].source, 3u);
  EXPECT_EQ(paths[0].target, 4u);
  EXPECT_DOUBLE_EQ(paths[0].weight, 1.0);
}

TEST(Paths, Fig1HasOneInternalCircuitWithH) {
  const auto circuits = one_circuits(fig1_f(), fig1_h(), 8);
  ASSERT_EQ(circuits.size(), 1u);
  // a (1->2 in F) then h2 (2->1 in H).
  EXPECT_EQ(circuits[0].edges, (std::vector<EdgeId>{0, 5}));
  EXPECT_DOUBLE_EQ(circuits[0].weight, 1.0);
  const CircuitCensus c = circuit_census(fig1_f(), fig1_h());
  EXPECT_TRUE(c.finite);
  EXPECT_EQ(c.count, 1u);
  EXPECT_EQ(c.max_length, 2u);
}

TEST(Paths, Fig1NoCircuitWithG) {
  EXPECT_TRUE(one_circuits(fig1_f(), fig1_g(), 8).empty());
  EXPECT_EQ(circuit_census(fig1_f(), fig1_g()).count, 0u);
}

TEST(Paths, Fig1Reductions) {
  const Reduction fg = reduce_truncated(fig1_f(), fig1_g(), 8);
  EXPECT_FALSE(fg.truncated);
  WeightedGraph expected(VertexSet{3, 4});
  expected.add_edge(4, 3, 1.0);  // c
  expected.add_edge(3, 4, 1.0);  // d g1 a g2 b
  EXPECT_TRUE(graph_equal(fg.graph, expected, 0.0));
  const Reduction fh = reduce_truncated(fig1_f(), fig1_h(), 8);
  EXPECT_FALSE(fh.truncated);
  EXPECT_TRUE(graph_equal(fh.graph, expected, 0.0));
  ASSERT_TRUE(reduce_full(fig1_f(), fig1_g()).has_value());
}

TEST(Paths, TruncationFlag) {
  // Four alternating steps are needed to leave 3 and reach 4 through G.
  EXPECT_TRUE(reduce_truncated(fig1_f(), fig1_g(), 3).truncated);
  EXPECT_FALSE(reduce_truncated(fig1_f(), fig1_g(), 5).truncated);
  // Loops on both sides of a shared vertex with an exit give unbounded paths.
  WeightedGraph f(VertexSet{1, 2});
  f.add_edge(1, 1, 0.5);
  f.add_edge(1, 2, 0.5);
  WeightedGraph g = loop(1, 0.5);
  g.add_vertex(3);
  g.add_edge(3, 1, 0.5);
  EXPECT_TRUE(reduce_truncated(f, g, 40).truncated);
  EXPECT_FALSE(reduce_full(f, g).has_value());
}

TEST(Paths, DisjointReductionIsUnion) {
  Rng rng = trial_rng(11, 0);
  for (int t = 0; t < 30; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2}, 5, 0.1, 1.0);
    const WeightedGraph h = random_graph(rng, VertexSet{5, 6}, 4, 0.1, 1.0);
    for (std::size_t l : {1u, 2u, 6u}) {
      EXPECT_TRUE(graph_equal(reduce_truncated(g, h, l).graph, graph_union(g, h), 0.0));
    }
  }
}

TEST(Paths, PathWeightsAreProducts) {
  Rng rng = trial_rng(12, 0);
  for (int t = 0; t < 20; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2, 3}, 6, 0.1, 1.0);
    const WeightedGraph h = random_graph(rng, VertexSet{2, 3, 4}, 5, 0.1, 1.0);
    const ColoredGraph p = plug(g, h);
    for (const Path& path : alternating_paths(p, VertexSet{0, 1, 4}, VertexSet{0, 1, 4}, 6)) {
      double w = 1.0;
      for (EdgeId e : path.edges) w *= p.underlying.edges()[e].weight;
      EXPECT_DOUBLE_EQ(path.weight, w);
      EXPECT_GT(path.weight, 0.0);
      EXPECT_LE(path.weight, 1.0);
    }
  }
}

TEST(Paths, CircuitsAlternateAndAreEven) {
  Rng rng = trial_rng(13, 0);
  for (int t = 0; t < 20; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2}, 4, 0.1, 1.0);
    const WeightedGraph h = random_graph(rng, VertexSet{0, 1, 2}, 4, 0.1, 1.0);
    const ColoredGraph p = plug(g, h);
    for (const Circuit& c : one_circuits(p, 8)) {
      ASSERT_EQ(c.length() % 2, 0u);
      for (std::size_t i = 0; i < c.length(); ++i) {
        const Edge& e = p.underlying.edges()[c.edges[i]];
        const Edge& f = p.underlying.edges()[c.edges[(i + 1) % c.length()]];
        EXPECT_EQ(e.dst, f.src);
        EXPECT_NE(p.color_of(e.id), p.color_of(f.id));
      }
      EXPECT_EQ(p.color_of(c.edges[0]), 0);
    }
  }
}

// Every alternating cycle of length n is a rotation of exactly one reported
// circuit, and its rotation orbit has n/k elements for primitivity degree k.
TEST(Paths, CircuitsAreRotationClasses) {
  Rng rng = trial_rng(14, 0);
  for (int t = 0; t < 15; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1}, 3, 0.1, 1.0);
    const WeightedGraph h = random_graph(rng, VertexSet{0, 1}, 3, 0.1, 1.0);
    const ColoredGraph p = plug(g, h);
    const auto circuits = one_circuits(p, 8);
    std::set<std::vector<EdgeId>> reported;
    for (const auto& c : circuits) reported.insert(c.edges);
    for (std::size_t n = 2; n <= 8; n += 2) {
      for (const auto& cyc : all_cycles(p, n)) {
        std::set<std::vector<EdgeId>> orbit;
        for (std::size_t r = 0; r < n; ++r) {
          std::vector<EdgeId> rot(cyc.begin() + r, cyc.end());
          rot.insert(rot.end(), cyc.begin(), cyc.begin() + r);
          orbit.insert(rot);
        }
        // primitivity degree: number of repetitions of the shortest period
        std::size_t period = n;
        for (std::size_t d = 1; d < n; ++d) {
          if (n % d) continue;
          bool ok = true;
          for (std::size_t i = 0; i + d < n; ++i) ok = ok && cyc[i] == cyc[i + d];
          if (ok) {
            period = d;
            break;
          }
        }
        EXPECT_EQ(orbit.size(), period);
        if (period != n) continue;
        std::size_t hits = 0;
        for (const auto& rot : orbit) hits += reported.count(rot);
        EXPECT_EQ(hits, 1u);
      }
    }
    std::size_t primitive_cycles = 0;
    for (std::size_t n = 2; n <= 8; n += 2) {
      for (const auto& cyc : all_cycles(p, n)) {
        bool primitive = true;
        for (std::size_t d = 1; d < n && primitive; ++d) {
          if (n % d) continue;
          bool same = true;
          for (std::size_t i = 0; i + d < n; ++i) same = same && cyc[i] == cyc[i + d];
          primitive = !same;
        }
        if (primitive) ++primitive_cycles;
      }
    }
    std::size_t total = 0;
    for (const auto& c : circuits) total += c.length();
    EXPECT_EQ(total, primitive_cycles);
  }
}

TEST(Paths, CensusAgreesWithEnumeration) {
  Rng rng = trial_rng(15, 0);
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2, 3}, 4, 0.1, 1.0);
    const WeightedGraph h = random_graph(rng, VertexSet{1, 2, 3}, 3, 0.1, 1.0);
    const CircuitCensus c = circuit_census(g, h);
    const std::size_t at12 = one_circuits(g, h, 12).size();
    const std::size_t at14 = one_circuits(g, h, 14).size();
    if (c.finite) {
      EXPECT_EQ(at12, c.count);
      EXPECT_EQ(at14, c.count);
      EXPECT_LE(c.max_length, 12u);
    } else {
      // Infinitely many circuits: the count keeps growing.
      EXPECT_LT(one_circuits(g, h, 6).size(), at14);
    }
  }
}

TEST(Paths, InfiniteCensusForSharedLoops) {
  WeightedGraph g = loop(1, 0.5);
  g.add_edge(1, 1, 0.5);
  const CircuitCensus c = circuit_census(g, loop(1, 0.5));
  EXPECT_FALSE(c.finite);
}

TEST(Paths, RejectsOddCircuitBound) {
  EXPECT_THROW(one_circuits(fig1_f(), fig1_h(), 3), InvalidArgument);
}
