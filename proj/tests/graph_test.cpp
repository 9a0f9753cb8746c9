#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "goi/graph.hpp"
#include "goi/graph_io.hpp"
#include "goi/random.hpp"

using namespace goi;

namespace {

WeightedGraph fig1_f() {
  WeightedGraph f(VertexSet{1, 2, 3, 4});
  f.add_edge(1, 2, 1.0);  // a
  f.add_edge(2, 4, 1.0);  // b
  f.add_edge(4, 3, 1.0);  // c
  f.add_edge(3, 1, 1.0);  // d
  return f;
}

WeightedGraph fig1_g() {
  WeightedGraph g(VertexSet{1, 2});
  g.add_edge(1, 1, 1.0);
  g.add_edge(2, 2, 1.0);
  return g;
}

WeightedGraph fig1_h() {
  WeightedGraph h(VertexSet{1, 2});
  h.add_edge(1, 2, 1.0);
  h.add_edge(2, 1, 1.0);
  return h;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  WeightedGraph g(VertexSet{1, 2});
  EXPECT_THROW(g.add_edge(1, 3, 0.5), InvalidArgument);
  EXPECT_THROW(g.add_edge(1, 2, 0.0), InvalidArgument);
  EXPECT_THROW(g.add_edge(1, 2, -1.0), InvalidArgument);
  EXPECT_THROW(g.add_edge(1, 2, std::numeric_limits<double>::infinity()), InvalidArgument);
  EXPECT_NO_THROW(g.add_edge(1, 2, 2.5));
  EXPECT_FALSE(g.has_unit_bounded_weights());
}

TEST(Graph, VertexSetOperations) {
  const VertexSet a{1, 2, 3}, b{3, 4};
  EXPECT_EQ(vertex_union(a, b), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(vertex_intersection(a, b), (VertexSet{3}));
  EXPECT_EQ(vertex_difference(a, b), (VertexSet{1, 2}));
  EXPECT_EQ(symmetric_difference(a, b), (VertexSet{1, 2, 4}));
  EXPECT_FALSE(disjoint(a, b));
  EXPECT_TRUE(is_subset(VertexSet{1, 3}, a));
}

TEST(Graph, UnionOfFig1FAndG) {
  const WeightedGraph u = graph_union(fig1_f(), fig1_g());
  EXPECT_EQ(u.vertices(), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(u.edge_count(), 6u);
  // Edges of the first graph keep their ids.
  EXPECT_EQ(u.edges()[3].src, 3u);
  EXPECT_EQ(u.edges()[4].src, 1u);
  EXPECT_EQ(u.edges()[4].dst, 1u);
}

TEST(Graph, PlugColoursFig1) {
  const ColoredGraph p = plug(fig1_f(), fig1_g());
  ASSERT_EQ(p.color.size(), 6u);
  EXPECT_EQ(std::count(p.color.begin(), p.color.end(), 0), 4);
  EXPECT_EQ(std::count(p.color.begin(), p.color.end(), 1), 2);
  const ColoredGraph q = plug(fig1_f(), fig1_h());
  EXPECT_EQ(std::count(q.color.begin(), q.color.end(), 0), 4);
  EXPECT_EQ(std::count(q.color.begin(), q.color.end(), 1), 2);
}

TEST(Graph, SelfPluggingKeepsBothCopies) {
  const ColoredGraph p = plug(fig1_h(), fig1_h());
  EXPECT_EQ(p.underlying.edge_count(), 4u);
}

TEST(Graph, SimplifySumsParallelEdges) {
  WeightedGraph g(VertexSet{1, 2});
  g.add_edge(1, 2, 0.3);
  g.add_edge(1, 2, 0.2);
  g.add_edge(2, 2, 0.1);
  const SimpleGraph s = simplify(g);
  EXPECT_NEAR(s.weight(1, 2), 0.5, 1e-15);
  EXPECT_NEAR(s.weight(2, 2), 0.1, 1e-15);
  EXPECT_EQ(s.weight(2, 1), 0.0);
  EXPECT_EQ(s.weights().size(), 2u);
}

TEST(Graph, SimplifyRoundTrip) {
  Rng rng = trial_rng(3, 0);
  for (int t = 0; t < 50; ++t) {
    const SimpleGraph s = random_simple_graph(rng, VertexSet{0, 1, 2, 3}, 0.4, 0.1, 2.0);
    EXPECT_TRUE(simple_equal(simplify(as_multigraph(s)), s, 0.0));
  }
}

TEST(Graph, AsMultigraphRejectsInfiniteWeights) {
  SimpleGraph s(VertexSet{1});
  s.set(1, 1, std::numeric_limits<double>::infinity());
  EXPECT_FALSE(is_total(s));
  EXPECT_THROW(as_multigraph(s), TotalityError);
}

TEST(Graph, TraceAndPower) {
  WeightedGraph g(VertexSet{1, 2, 3});
  g.add_edge(1, 2, 0.5);
  g.add_edge(2, 3, 0.5);
  g.add_edge(3, 3, 0.25);
  g.add_edge(3, 3, 0.5);
  EXPECT_DOUBLE_EQ(graph_trace(g), 0.75);
  SimpleGraph chain(VertexSet{1, 2, 3});
  chain.set(1, 2, 0.5);
  chain.set(2, 3, 0.5);
  const SimpleGraph sq = graph_power(chain, 2);
  EXPECT_EQ(sq.weights().size(), 1u);
  EXPECT_DOUBLE_EQ(sq.weight(1, 3), 0.25);
  EXPECT_THROW(graph_power(chain, 0), InvalidArgument);
}

TEST(Graph, PowerMatchesPathSums) {
  // Entry (v,w) of S^k is the sum over all length-k walks of the products.
  Rng rng = trial_rng(5, 0);
  const VertexSet vs{0, 1, 2};
  const SimpleGraph s = random_simple_graph(rng, vs, 0.6, 0.1, 0.9);
  const SimpleGraph cube = graph_power(s, 3);
  for (Vertex a : vs)
    for (Vertex d : vs) {
      double sum = 0.0;
      for (Vertex b : vs)
        for (Vertex c : vs) sum += s.weight(a, b) * s.weight(b, c) * s.weight(c, d);
      EXPECT_NEAR(cube.weight(a, d), sum, 1e-15);
    }
}

TEST(Graph, Symmetry) {
  SimpleGraph fax(VertexSet{1, 2});
  fax.set(1, 2, 1.0);
  fax.set(2, 1, 1.0);
  EXPECT_TRUE(is_symmetric(fax));
  SimpleGraph one(VertexSet{1, 2});
  one.set(1, 2, 1.0);
  EXPECT_FALSE(is_symmetric(one));
  SimpleGraph pair(VertexSet{1, 2});
  pair.set(1, 2, 0.3);
  pair.set(2, 1, 0.3);
  EXPECT_TRUE(is_symmetric(pair));
}

TEST(Graph, EqualityIsMultisetBased) {
  WeightedGraph a(VertexSet{1, 2}), b(VertexSet{1, 2});
  a.add_edge(1, 2, 0.2);
  a.add_edge(1, 2, 0.3);
  b.add_edge(1, 2, 0.3);
  b.add_edge(1, 2, 0.2);
  EXPECT_TRUE(graph_equal(a, a, 0.0));
  EXPECT_TRUE(graph_equal(a, b, 0.0));
  WeightedGraph c(VertexSet{1, 2}), d(VertexSet{1, 2});
  c.add_edge(1, 2, 0.5);
  d.add_edge(1, 2, 0.5 + 1e-12);
  EXPECT_TRUE(graph_equal(c, d, 1e-9));
  EXPECT_FALSE(graph_equal(c, d, 0.0));
  EXPECT_FALSE(graph_equal(c, WeightedGraph(VertexSet{1, 2, 3}), 1e-9));
  d.add_edge(1, 2, 0.5);
  EXPECT_FALSE(graph_equal(c, d, 1e-9));
}

TEST(Graph, Relabel) {
  WeightedGraph g(VertexSet{1});
  g.add_edge(1, 1, 0.5);
  const WeightedGraph r = relabel(g, [](Vertex v) { return v + 4; });
  EXPECT_EQ(r.vertices(), (VertexSet{5}));
  EXPECT_EQ(r.edges()[0].src, 5u);
  EXPECT_THROW(relabel(WeightedGraph(VertexSet{1, 2}), [](Vertex) { return Vertex{0}; }),
               DelocationError);
}

TEST(GraphIo, RoundTrip) {
  const std::string text = "vertices 1 2 3\nedge 1 2 0.5\nedge 2 3 0.125\nedge 1 2 0.25\n";
  const WeightedGraph g = parse_graph(text);
  EXPECT_EQ(write_graph(g), text);
  EXPECT_TRUE(graph_equal(parse_graph(write_graph(g)), g, 0.0));
}

TEST(GraphIo, CommentsAndBlankLines) {
  const WeightedGraph g = parse_graph("# header\n\nvertices 4 7  # two\nedge 4 7 1 # one edge\n");
  EXPECT_EQ(g.vertices(), (VertexSet{4, 7}));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphIo, ErrorsCarryLocation) {
  try {
    parse_graph("vertices 1 2\nedge 1 x 0.5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
  try {
    parse_graph("vertices 1 2\nedge 1 2 0.5 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("edge 1 2 0.5\n"), ParseError);
  EXPECT_THROW(parse_graph("vertices 1\nedge 1 2 0.5\n"), ParseError);
  EXPECT_THROW(parse_graph("vertices 1\nedge 1 1 -0.5\n"), ParseError);
}

TEST(GraphIo, DotMarksPlugColours) {
  const std::string dot = write_dot(plug(fig1_f(), fig1_g()));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  std::size_t zeros = 0, ones = 0;
  for (std::size_t p = dot.find("plug=0"); p != std::string::npos; p = dot.find("plug=0", p + 1)) ++zeros;
  for (std::size_t p = dot.find("plug=1"); p != std::string::npos; p = dot.find("plug=1", p + 1)) ++ones;
  EXPECT_EQ(zeros, 4u);
  EXPECT_EQ(ones, 2u);
}
