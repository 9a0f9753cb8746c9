#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "goi/measure.hpp"
#include "goi/random.hpp"

using namespace goi;

namespace {

WeightedGraph loop(Vertex v, double w) {
  WeightedGraph g(VertexSet{v});
  g.add_edge(v, v, w);
  return g;
}

WeightedGraph fig1_f() {
  WeightedGraph f(VertexSet{1, 2, 3, 4});
  f.add_edge(1, 2, 1.0);
  f.add_edge(2, 4, 1.0);
  f.add_edge(4, 3, 1.0);
  f.add_edge(3, 1, 1.0);
  return f;
}

WeightedGraph fig1_h() {
  WeightedGraph h(VertexSet{1, 2});
  h.add_edge(1, 2, 1.0);
  h.add_edge(2, 1, 1.0);
  return h;
}

// Leibniz expansion over all permutations; fine for n <= 7.
double leibniz_det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double det = 0.0;
  do {
    double term = 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

double oracle_measure(const WeightedGraph& g, const WeightedGraph& h) {
  const VertexSet carrier = vertex_union(g.vertices(), h.vertices());
  const std::vector<Vertex> idx(carrier.begin(), carrier.end());
  const std::size_t n = idx.size();
  auto matrix = [&](const WeightedGraph& x) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (const Edge& e : x.edges()) {
      const auto i = std::lower_bound(idx.begin(), idx.end(), e.src) - idx.begin();
      const auto j = std::lower_bound(idx.begin(), idx.end(), e.dst) - idx.begin();
      m[i][j] += e.weight;
    }
    return m;
  };
  const auto a = matrix(g), b = matrix(h);
  std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = (i == j ? 1.0 : 0.0) - s;
    }
  return -std::log(leibniz_det(c));
}

}  // namespace

TEST(Measure, SharedLoops) {
  const double expected = -std::log(0.75);
  const Measurement exact = measure_exact(loop(1, 0.5), loop(1, 0.5));
  EXPECT_NEAR(exact.value, expected, 1e-12);
  EXPECT_EQ(exact.route, Route::logdet);
  const Measurement e = measure_truncated(loop(1, 0.5), loop(1, 0.5), 2);
  EXPECT_NEAR(e.value, expected, 1e-12);
  EXPECT_FALSE(e.truncated());
}

TEST(Measure, WeightOneCircuitIsInfinite) {
  EXPECT_TRUE(std::isinf(measure_exact(fig1_f(), fig1_h()).value));
  EXPECT_TRUE(std::isinf(measure_truncated(fig1_f(), fig1_h(), 8).value));
  EXPECT_TRUE(std::isinf(circuit_measure(1.0)));
  EXPECT_DOUBLE_EQ(circuit_measure(0.0), 0.0);
}

TEST(Measure, AdjunctionWorkedExample) {
  // F: 1 <-> 2 at 1/2; G a loop at 1 and H a loop at 2, both of weight 1/4.
  // <F,G> has no circuit and F::G is a loop at 2 of weight 1/16.
  WeightedGraph f(VertexSet{1, 2});
  f.add_edge(1, 2, 0.5);
  f.add_edge(2, 1, 0.5);
  const AdjunctionReport r = check_adjunction(f, loop(1, 0.25), loop(2, 0.25));
  EXPECT_TRUE(r.holds);
  EXPECT_DOUBLE_EQ(r.first.value, 0.0);
  EXPECT_NEAR(r.whole.value, -std::log(63.0 / 64.0), 1e-12);
  EXPECT_NEAR(r.reduced.value, -std::log(63.0 / 64.0), 1e-12);
  WeightedGraph reduct(VertexSet{2});
  reduct.add_edge(2, 2, 1.0 / 16.0);
  EXPECT_TRUE(graph_equal(*reduce_full(f, loop(1, 0.25)), reduct, 1e-15));
}

TEST(Measure, EmptyPartnerGivesZero) {
  WeightedGraph h(VertexSet{7});
  EXPECT_DOUBLE_EQ(measure_exact(fig1_f(), h).value, 0.0);
  EXPECT_DOUBLE_EQ(measure_truncated(fig1_f(), h, 6).value, 0.0);
}

TEST(Measure, ParallelLoopsAddUp) {
  WeightedGraph two(VertexSet{1});
  two.add_edge(1, 1, 0.25);
  two.add_edge(1, 1, 0.25);
  const InvarianceReport r = check_simplify_invariance(loop(1, 0.5), two, 8);
  EXPECT_TRUE(r.exact_agrees);
  EXPECT_TRUE(r.monotone_lower_bounds);
  EXPECT_NEAR(r.exact.value, -std::log(0.75), 1e-12);
  // Enumeration only approaches the value from below.
  ASSERT_EQ(r.enumerated.size(), 4u);
  EXPECT_TRUE(r.enumerated.back().truncated());
  EXPECT_LT(r.enumerated.back().value, r.exact.value);
}

TEST(Measure, IsSymmetric) {
  Rng rng = trial_rng(21, 0);
  for (int t = 0; t < 50; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2}, 4, 0.05, 0.6);
    const WeightedGraph h = random_graph(rng, VertexSet{1, 2, 3}, 4, 0.05, 0.6);
    const double a = measure_exact(g, h).value, b = measure_exact(h, g).value;
    if (std::isinf(a)) {
      EXPECT_TRUE(std::isinf(b));
    } else {
      EXPECT_NEAR(a, b, 1e-9);
    }
  }
}

TEST(Measure, MatchesDeterminantOracle) {
  Rng rng = trial_rng(22, 0);
  int finite = 0;
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2, 3}, 5, 0.05, 0.5);
    const WeightedGraph h = random_graph(rng, VertexSet{1, 2, 3, 4}, 5, 0.05, 0.5);
    const double exact = measure_exact(g, h).value;
    if (std::isinf(exact)) continue;
    ++finite;
    EXPECT_NEAR(exact, oracle_measure(g, h), 1e-9);
  }
  EXPECT_GT(finite, 50);
}

TEST(Measure, EnumerationIsALowerBound) {
  Rng rng = trial_rng(23, 0);
  for (int t = 0; t < 50; ++t) {
    const WeightedGraph g = random_graph(rng, VertexSet{0, 1, 2}, 4, 0.05, 0.5);
    const WeightedGraph h = random_graph(rng, VertexSet{0, 1, 2}, 4, 0.05, 0.5);
    const double exact = measure_exact(g, h).value;
    double prev = 0.0;
    for (std::size_t l = 2; l <= 10; l += 2) {
      const Measurement m = measure_truncated(g, h, l);
      EXPECT_GE(m.value + 1e-12, prev);
      if (!std::isinf(exact)) EXPECT_LE(m.value, exact + 1e-9);
      if (!m.truncated() && !std::isinf(exact)) EXPECT_NEAR(m.value, exact, 1e-9);
      prev = m.value;
    }
  }
}

TEST(Measure, AdjunctionRejectsBadCarriers) {
  EXPECT_THROW(check_adjunction(fig1_f(), loop(1, 0.5), loop(1, 0.5)), CarrierError);
  EXPECT_THROW(check_adjunction(fig1_f(), loop(9, 0.5), loop(1, 0.5)), CarrierError);
}

TEST(Measure, AgreementRule) {
  EXPECT_TRUE(measures_agree(kInfinity, {1.0, kInfinity}));
  EXPECT_FALSE(measures_agree(kInfinity, {1.0, 2.0}));
  EXPECT_FALSE(measures_agree(3.0, {1.0, kInfinity}));
  EXPECT_TRUE(measures_agree(3.0, {1.0, 2.0 + 1e-12}));
  EXPECT_TRUE(measures_agree(1e6, {1e6 * (1 + 1e-12)}));
}
