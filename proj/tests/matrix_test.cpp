#include <gtest/gtest.h>

#include <cmath>

#include "goi/matrix.hpp"
#include "goi/measure.hpp"
#include "goi/random.hpp"

using namespace goi;

namespace {

LocalizedMatrix mat2(double a, double b, double c, double d) {
  LocalizedMatrix m(std::vector<Vertex>{0, 1});
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

LocalizedMatrix random_matrix(Rng& rng, std::size_t n, double density, double hi) {
  std::vector<Vertex> idx;
  for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
  LocalizedMatrix m(idx);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) m(i, j) = uniform_real(rng, 0.0, hi);
  return m;
}

}  // namespace

TEST(Matrix, AdjacencyOverLargerCarrier) {
  SimpleGraph s(VertexSet{2, 5});
  s.set(2, 5, 0.5);
  s.set(5, 5, 0.25);
  const LocalizedMatrix m = adjacency_matrix(s, VertexSet{1, 2, 5});
  ASSERT_EQ(m.dim(), 3u);
  EXPECT_EQ(m(1, 2), 0.5);
  EXPECT_EQ(m(2, 2), 0.25);
  EXPECT_EQ(m(0, 0), 0.0);
  EXPECT_THROW(adjacency_matrix(s, VertexSet{2}), CarrierError);
  EXPECT_TRUE(simple_equal(matrix_graph(adjacency_matrix(s)), s, 0.0));
}

TEST(Matrix, OperatorGraphs) {
  SimpleGraph swap(VertexSet{1, 2});
  swap.set(1, 2, 1.0);
  swap.set(2, 1, 1.0);
  EXPECT_TRUE(is_operator_graph(swap));
  SimpleGraph big(VertexSet{1, 2});
  big.set(1, 2, 0.8);
  big.set(2, 1, 0.8);
  big.set(1, 1, 0.5);
  EXPECT_FALSE(is_operator_graph(big));  // norm (0.5 + sqrt(2.81)) / 2 > 1
  SimpleGraph one_way(VertexSet{1, 2});
  one_way.set(1, 2, 0.5);
  EXPECT_FALSE(is_operator_graph(one_way));
  EXPECT_NEAR(operator_norm(mat2(0.0, 0.5, 0.0, 0.0)), 0.5, 1e-12);
  EXPECT_NEAR(operator_norm(mat2(0.5, 0.8, 0.8, 0.0)), (0.5 + std::sqrt(0.25 + 4 * 0.64)) / 2, 1e-12);
}

TEST(Matrix, TraceSeriesOfScalar) {
  LocalizedMatrix m(std::vector<Vertex>{1});
  m(0, 0) = 0.25;
  const auto s = trace_series_partial(m, 3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0], 0.25, 1e-15);
  EXPECT_NEAR(s[1], 0.28125, 1e-15);
  EXPECT_NEAR(s[2], 0.2864583333333333, 1e-15);
  EXPECT_NEAR(trace_series_partial(m, 60).back(), -std::log(0.75), 1e-12);
  EXPECT_NEAR(log_det_one_minus(m), -std::log(0.75), 1e-15);
  EXPECT_THROW(trace_series_partial(m, 0), InvalidArgument);
}

TEST(Matrix, LogDetExamples) {
  EXPECT_NEAR(log_det_one_minus(mat2(0.0, 0.5, 0.5, 0.0)), -std::log(0.75), 1e-15);
  EXPECT_DOUBLE_EQ(log_det_one_minus(mat2(0.0, 0.9, 0.0, 0.0)), 0.0);
  EXPECT_TRUE(std::isinf(log_det_one_minus(mat2(0.0, 1.0, 1.0, 0.0))));
  EXPECT_TRUE(std::isinf(log_det_one_minus(mat2(0.6, 0.5, 0.5, 0.6))));
}

TEST(Matrix, SpectralRadiusClosedForm) {
  Rng rng = trial_rng(31, 0);
  for (int t = 0; t < 100; ++t) {
    const double a = uniform_real(rng, 0.0, 1.0), b = uniform_real(rng, 0.0, 1.0);
    const double c = uniform_real(rng, 0.0, 1.0), d = uniform_real(rng, 0.0, 1.0);
    const double expected = (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * c);
    EXPECT_NEAR(spectral_radius(mat2(a, b, c, d)), expected, 1e-9);
    if (std::abs(expected - 1.0) > 1e-9) EXPECT_EQ(is_subcritical(mat2(a, b, c, d), 0.0), expected < 1.0);
  }
  EXPECT_DOUBLE_EQ(spectral_radius(mat2(0.0, 0.7, 0.0, 0.0)), 0.0);
  EXPECT_THROW(spectral_radius(mat2(-0.1, 0.0, 0.0, 0.0)), InvalidArgument);
}

TEST(Matrix, PowerIterationCanRunOut) {
  PowerIterationOptions opt;
  opt.max_iterations = 1;
  try {
    spectral_radius(mat2(0.5, 0.2, 0.3, 0.1), opt);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.last_estimate(), 0.0);
  }
}

TEST(Matrix, LogDetMatchesTraceSeries) {
  Rng rng = trial_rng(32, 0);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const LocalizedMatrix m = random_matrix(rng, 4, 0.5, 0.4);
    if (!is_subcritical(m, 0.1)) continue;
    ++checked;
    EXPECT_NEAR(log_det_one_minus(m), trace_series_partial(m, 500).back(), 1e-6);
  }
  EXPECT_GT(checked, 50);
}

TEST(Matrix, DeterminantIsCyclic) {
  Rng rng = trial_rng(33, 0);
  for (int t = 0; t < 50; ++t) {
    const LocalizedMatrix a = random_matrix(rng, 5, 0.6, 1.0);
    const LocalizedMatrix b = random_matrix(rng, 5, 0.6, 1.0);
    const LocalizedMatrix one = LocalizedMatrix::identity(a.index());
    const double x = determinant(one - a * b), y = determinant(one - b * a);
    EXPECT_NEAR(x, y, 1e-9 * std::max(1.0, std::abs(x)));
  }
}

TEST(Matrix, InverseRoundTrip) {
  Rng rng = trial_rng(34, 0);
  const LocalizedMatrix a = random_matrix(rng, 4, 0.7, 0.3);
  const LocalizedMatrix one = LocalizedMatrix::identity(a.index());
  const LocalizedMatrix p = (one - a) * gauss_jordan_inverse(one - a);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(p(i, j), i == j ? 1.0 : 0.0, 1e-12);
  const LocalizedMatrix x = solve_matrix(one - a, one);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(x(i, j), gauss_jordan_inverse(one - a)(i, j), 1e-12);
}

// Fig. 8 and 9: the four paths of A::B collapse to (x1 + x2)(y1 + y2).
TEST(Matrix, ParallelEdgesFactor) {
  WeightedGraph a(VertexSet{1, 2});
  a.add_edge(1, 2, 0.3);
  a.add_edge(1, 2, 0.2);
  WeightedGraph b(VertexSet{2, 3});
  b.add_edge(2, 3, 0.4);
  b.add_edge(2, 3, 0.1);
  const SimpleGraph s = reduce_exact(a, b);
  EXPECT_EQ(s.vertices(), (VertexSet{1, 3}));
  EXPECT_EQ(s.weights().size(), 1u);
  EXPECT_NEAR(s.weight(1, 3), 0.5 * 0.5, 1e-15);
  const auto full = reduce_full(a, b);
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->edge_count(), 4u);
  EXPECT_TRUE(simple_equal(simplify(*full), s, 1e-15));
}

TEST(Matrix, Fig1ReduceExact) {
  WeightedGraph f(VertexSet{1, 2, 3, 4});
  f.add_edge(1, 2, 1.0);
  f.add_edge(2, 4, 1.0);
  f.add_edge(4, 3, 1.0);
  f.add_edge(3, 1, 1.0);
  WeightedGraph g(VertexSet{1, 2});
  g.add_edge(1, 1, 1.0);
  g.add_edge(2, 2, 1.0);
  const SimpleGraph s = reduce_exact(f, g);
  SimpleGraph expected(VertexSet{3, 4});
  expected.set(3, 4, 1.0);
  expected.set(4, 3, 1.0);
  EXPECT_TRUE(simple_equal(s, expected, 1e-15));
  WeightedGraph h(VertexSet{1, 2});
  h.add_edge(1, 2, 1.0);
  h.add_edge(2, 1, 1.0);
  EXPECT_THROW(reduce_exact(f, h), TotalityError);
}

TEST(Matrix, FeedbackAgreesWithPathSums) {
  Rng rng = trial_rng(35, 0);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph f = random_graph(rng, VertexSet{0, 1, 2, 3}, 5, 0.1, 0.8);
    const WeightedGraph g = random_graph(rng, VertexSet{2, 3, 4}, 4, 0.1, 0.8);
    const auto full = reduce_full(f, g);
    if (!full) continue;
    ++compared;
    EXPECT_TRUE(simple_equal(simplify(*full), reduce_exact(f, g), 1e-12));
    EXPECT_TRUE(check_feedback_equation(simplify(f), simplify(g), reduce_exact(f, g)));
  }
  EXPECT_GT(compared, 50);
}

TEST(Matrix, IndexMustIncrease) {
  EXPECT_THROW(LocalizedMatrix(std::vector<Vertex>{2, 1}), InvalidArgument);
  LocalizedMatrix a(std::vector<Vertex>{1, 2}), b(std::vector<Vertex>{1, 3});
  EXPECT_THROW(a * b, InvalidArgument);
}
