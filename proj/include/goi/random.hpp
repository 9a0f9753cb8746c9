#pragma once

// Seeded generators. Every trial gets its own engine, seeded from the master
// seed and the trial index through splitmix64, so trials can be replayed one
// at a time.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "goi/graph.hpp"

namespace goi {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ trial);
}

inline Rng trial_rng(std::uint64_t master, std::uint64_t trial) {
  return Rng(trial_seed(master, trial));
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// A set of `size` distinct vertices drawn from [0, bound).
inline VertexSet random_vertices(Rng& rng, std::size_t size, Vertex bound) {
  if (size > bound) throw InvalidArgument("not enough vertices below the bound");
  VertexSet s;
  while (s.size() < size) s.insert(std::uniform_int_distribution<Vertex>(0, bound - 1)(rng));
  return s;
}

// Up to max_edges edges between random endpoints, weights uniform in [lo, hi].
inline WeightedGraph random_graph(Rng& rng, const VertexSet& carrier, std::size_t max_edges,
                                  double lo, double hi) {
  WeightedGraph g(carrier);
  if (carrier.empty()) return g;
  const std::vector<Vertex> vs(carrier.begin(), carrier.end());
  const std::size_t n = uniform_index(rng, 0, max_edges);
  for (std::size_t e = 0; e < n; ++e) {
    const Vertex a = vs[uniform_index(rng, 0, vs.size() - 1)];
    const Vertex b = vs[uniform_index(rng, 0, vs.size() - 1)];
    g.add_edge(a, b, uniform_real(rng, lo, hi));
  }
  return g;
}

// Each entry present with probability density, weight uniform in [lo, hi].
inline SimpleGraph random_simple_graph(Rng& rng, const VertexSet& carrier, double density,
                                       double lo, double hi) {
  SimpleGraph s(carrier);
  for (Vertex a : carrier)
    for (Vertex b : carrier)
      if (coin(rng, density)) s.set(a, b, uniform_real(rng, lo, hi));
  return s;
}

// A random partial matching on the carrier, as a list of pairs.
inline std::vector<std::pair<Vertex, Vertex>> random_matching(Rng& rng, const VertexSet& carrier) {
  std::vector<Vertex> vs(carrier.begin(), carrier.end());
  std::shuffle(vs.begin(), vs.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
    if (coin(rng, 0.75)) pairs.emplace_back(vs[i], vs[i + 1]);
  }
  return pairs;
}

// Weight-1 edges both ways along every pair.
inline WeightedGraph matching_graph(const VertexSet& carrier,
                                    const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  WeightedGraph g(carrier);
  for (const auto& [a, b] : pairs) {
    g.add_edge(a, b, 1.0);
    g.add_edge(b, a, 1.0);
  }
  return g;
}

}  // namespace goi
