#pragma once

// Seeded property suites shared by the command line tool and the acceptance
// tests. Each trial draws from its own engine (see random.hpp).

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "goi/category.hpp"
#include "goi/logic/cut_elim.hpp"
#include "goi/logic/generate.hpp"
#include "goi/logic/switching.hpp"
#include "goi/matrix.hpp"
#include "goi/measure.hpp"
#include "goi/paths.hpp"
#include "goi/project.hpp"
#include "goi/random.hpp"
#include "goi/truth.hpp"

namespace goi {

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t max_vertices = 6;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<TrialFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const {
    return std::to_string(passed) + "/" + std::to_string(trials) + " pass";
  }
};

namespace detail {

// Runs `trial` for each index; an empty string means pass. Exceptions count
// as failures carrying their message.
inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt,
                             const std::function<std::string(Rng&, std::size_t)>& trial) {
  SuiteReport r;
  r.name = name;
  r.trials = opt.trials;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng = trial_rng(opt.seed, t);
    std::string detail;
    try {
      detail = trial(rng, t);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      ++r.passed;
    } else {
      r.failures.push_back({t, detail});
    }
  }
  return r;
}

inline std::size_t vertex_bound(const SuiteOptions& opt) { return std::max<std::size_t>(opt.max_vertices, 1); }

// Carrier of F with G and H inside it and disjoint from each other.
struct AdjunctionCarriers {
  VertexSet f, g, h;
};

inline AdjunctionCarriers adjunction_carriers(Rng& rng, std::size_t max_vertices) {
  AdjunctionCarriers c;
  c.f = random_vertices(rng, uniform_index(rng, 1, max_vertices), 2 * max_vertices);
  for (Vertex v : c.f) {
    switch (uniform_index(rng, 0, 2)) {
      case 0: c.g.insert(v); break;
      case 1: c.h.insert(v); break;
      default: break;
    }
  }
  return c;
}

inline std::string number(double x) { return format_decimal(x); }

}  // namespace detail

// <F, G u H> = <F, G> + <F::G, H> on random triples, weights in [0.1, 0.9].
inline SuiteReport verify_adjunction(const SuiteOptions& opt) {
  return detail::run_suite("adjunction", opt, [&](Rng& rng, std::size_t) -> std::string {
    const auto c = detail::adjunction_carriers(rng, detail::vertex_bound(opt));
    const WeightedGraph f = random_graph(rng, c.f, 3 * c.f.size(), 0.1, 0.9);
    const WeightedGraph g = random_graph(rng, c.g, 2 * c.g.size() + 1, 0.1, 0.9);
    const WeightedGraph h = random_graph(rng, c.h, 2 * c.h.size() + 1, 0.1, 0.9);
    const AdjunctionReport r = check_adjunction(f, g, h);
    if (r.holds) return "";
    return "<F,GuH>=" + detail::number(r.whole.value) + " <F,G>=" + detail::number(r.first.value) +
           " <F::G,H>=" + detail::number(r.reduced.value);
  });
}

// Number of 1-circuits, read off the enumeration at the exact maximal length
// and confirmed unchanged two steps further.
inline std::optional<std::size_t> finite_circuit_count(const WeightedGraph& g, const WeightedGraph& h) {
  const CircuitCensus census = circuit_census(g, h);
  if (!census.finite) return std::nullopt;
  const std::size_t l = std::max<std::size_t>(2, census.max_length + census.max_length % 2);
  const std::size_t count = one_circuits(g, h, l).size();
  if (one_circuits(g, h, l + 2).size() != count) return std::nullopt;
  return count;
}

// #C(F, G u H) = #C(F, G) + #C(F::G, H) on instances with finitely many
// circuits and paths.
inline SuiteReport verify_circuit_adjunction(const SuiteOptions& opt) {
  return detail::run_suite("circuit count", opt, [&](Rng& rng, std::size_t) -> std::string {
    // Prefer an instance where both terms on the right are nonzero.
    std::optional<std::array<std::size_t, 3>> found;
    for (int attempt = 0; attempt < 2000; ++attempt) {
      const auto c = detail::adjunction_carriers(rng, detail::vertex_bound(opt));
      const WeightedGraph f = random_graph(rng, c.f, c.f.size() + 1, 0.1, 1.0);
      const WeightedGraph g = random_graph(rng, c.g, c.g.size(), 0.1, 1.0);
      const WeightedGraph h = random_graph(rng, c.h, c.h.size(), 0.1, 1.0);
      const auto whole = finite_circuit_count(f, graph_union(g, h));
      const auto first = finite_circuit_count(f, g);
      const auto fg = reduce_full(f, g);
      if (!whole || !first || !fg) continue;
      const auto reduced = finite_circuit_count(*fg, h);
      if (!reduced) continue;
      const bool rich = *first > 0 && *reduced > 0;
      if (!found || rich) found = std::array<std::size_t, 3>{*whole, *first, *reduced};
      if (rich) break;
    }
    if (!found) return "no instance with finitely many circuits found";
    const auto [whole, first, reduced] = *found;
    if (whole == first + reduced) return "";
    return "#C(F,GuH)=" + std::to_string(whole) + " #C(F,G)=" + std::to_string(first) +
           " #C(F::G,H)=" + std::to_string(reduced);
  });
}

// Trace series at K = 500 against log det, for products with spectral
// radius below 0.9.
inline SuiteReport verify_routes(const SuiteOptions& opt) {
  return detail::run_suite("route equivalence", opt, [&](Rng& rng, std::size_t) -> std::string {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const VertexSet carrier =
          random_vertices(rng, uniform_index(rng, 1, detail::vertex_bound(opt)), 2 * detail::vertex_bound(opt));
      const SimpleGraph f = random_simple_graph(rng, carrier, 0.5, 0.05, 0.9);
      const SimpleGraph g = random_simple_graph(rng, carrier, 0.5, 0.05, 0.9);
      const LocalizedMatrix m = adjacency_matrix(f, carrier) * adjacency_matrix(g, carrier);
      if (!is_subcritical(m, 0.1)) continue;
      const double exact = log_det_one_minus(m);
      const double series = trace_series_partial(m, 500).back();
      if (std::abs(series - exact) <= 1e-6) return "";
      return "series=" + detail::number(series) + " logdet=" + detail::number(exact);
    }
    return "no subcritical instance found";
  });
}

// <G,H> = <G, simplify(H)> and truncated sums are monotone lower bounds.
inline SuiteReport verify_invariance(const SuiteOptions& opt) {
  return detail::run_suite("simplification invariance", opt, [&](Rng& rng, std::size_t) -> std::string {
    const std::size_t n = detail::vertex_bound(opt);
    const VertexSet vg = random_vertices(rng, uniform_index(rng, std::min<std::size_t>(2, n), n), n);
    const VertexSet vh = random_vertices(rng, uniform_index(rng, std::min<std::size_t>(2, n), n), n);
    const WeightedGraph g = random_graph(rng, vg, 3 * vg.size() + 2, 0.05, 0.6);
    // Parallel edges in H.
    WeightedGraph h = random_graph(rng, vh, 3 * vh.size() + 1, 0.05, 0.6);
    const std::vector<Edge> existing = h.edges();
    for (const Edge& e : existing)
      if (coin(rng)) h.add_edge(e.src, e.dst, uniform_real(rng, 0.05, 0.4));
    const InvarianceReport r = check_simplify_invariance(g, h, 8);
    if (r.holds()) return "";
    std::string why;
    if (!r.exact_agrees) {
      why += " exact=" + detail::number(r.exact.value) + " simplified=" + detail::number(r.exact_simplified.value);
    }
    if (!r.monotone_lower_bounds) why += " enumeration is not a monotone lower bound";
    if (!r.enumeration_agrees) why += " untruncated enumeration differs";
    return why.substr(1);
  });
}

// Symmetric simple graph with operator norm in [0.3, 0.95].
inline SimpleGraph random_operator_graph(Rng& rng, const VertexSet& carrier) {
  SimpleGraph s(carrier);
  for (Vertex a : carrier)
    for (Vertex b : carrier)
      if (a <= b && coin(rng, 0.5)) {
        const double w = uniform_real(rng, 0.1, 1.0);
        s.set(a, b, w);
        s.set(b, a, w);
      }
  if (s.weights().empty()) return s;
  const double norm = operator_norm(adjacency_matrix(s));
  const double scale = uniform_real(rng, 0.3, 0.95) / norm;
  SimpleGraph out(carrier);
  for (const auto& [key, w] : s.weights()) out.set(key.first, key.second, w * scale);
  return out;
}

// Feedback equation, operator-graph closure and the matrix adjunction on
// operator graphs F over V_G1 u V_G2.
inline SuiteReport verify_matrix(const SuiteOptions& opt) {
  return detail::run_suite("feedback equation", opt, [&](Rng& rng, std::size_t) -> std::string {
    const std::size_t n = detail::vertex_bound(opt);
    const VertexSet vf = random_vertices(rng, uniform_index(rng, 1, n), 2 * n);
    VertexSet v1, v2;
    for (Vertex v : vf) (coin(rng) ? v1 : v2).insert(v);
    const SimpleGraph f = random_operator_graph(rng, vf);
    const SimpleGraph g1 = random_operator_graph(rng, v1);
    const SimpleGraph g2 = random_operator_graph(rng, v2);
    if (std::isinf(simple_measure(f, g1))) return "infinite measurement";
    const SimpleGraph s = feedback_solve(f, g1);
    if (!check_feedback_equation(f, g1, s, 1e-9)) return "feedback equation not reproduced";
    if (!is_operator_graph(s)) return "solution is not an operator graph";
    const AdjunctionReport r = check_matrix_adjunction(f, g1, g2);
    if (!r.holds) {
      return "matrix adjunction: " + detail::number(r.whole.value) + " vs " +
             detail::number(r.first.value) + " + " + detail::number(r.reduced.value);
    }
    return "";
  });
}

// F::(G::H) = (F::G)::H when no vertex lies in all three carriers.
inline SuiteReport verify_assoc(const SuiteOptions& opt) {
  return detail::run_suite("associativity", opt, [&](Rng& rng, std::size_t) -> std::string {
    const std::size_t n = detail::vertex_bound(opt);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      VertexSet c[3];
      for (Vertex v = 0; v < 2 * n; ++v) {
        switch (uniform_index(rng, 0, 6)) {
          case 0: c[0].insert(v); break;
          case 1: c[1].insert(v); break;
          case 2: c[2].insert(v); break;
          case 3: c[0].insert(v), c[1].insert(v); break;
          case 4: c[1].insert(v), c[2].insert(v); break;
          case 5: c[0].insert(v), c[2].insert(v); break;
          default: break;
        }
      }
      WeightedGraph g[3];
      for (int i = 0; i < 3; ++i) g[i] = random_graph(rng, c[i], c[i].size() + 1, 0.1, 1.0);
      const auto right_inner = reduce_full(g[1], g[2]);
      const auto left_inner = reduce_full(g[0], g[1]);
      if (!right_inner || !left_inner) continue;
      const auto right = reduce_full(g[0], *right_inner);
      const auto left = reduce_full(*left_inner, g[2]);
      if (!right || !left) continue;
      if (graph_equal(*right, *left, 1e-12)) return "";
      return "F::(G::H) =\n" + write_graph(*right) + "(F::G)::H =\n" + write_graph(*left);
    }
    return "no instance with finitely many paths found";
  });
}

// Three graphs sharing vertex 1: F and G edgeless, H a loop. The two
// association orders differ.
struct AssocCounterexample {
  WeightedGraph right;  // F::(G::H)
  WeightedGraph left;   // (F::G)::H
  bool differ = false;
};

inline AssocCounterexample assoc_counterexample() {
  const WeightedGraph f(VertexSet{1}), g(VertexSet{1});
  WeightedGraph h(VertexSet{1});
  h.add_edge(1, 1, 0.5);
  AssocCounterexample r;
  r.right = *reduce_full(f, *reduce_full(g, h));
  r.left = *reduce_full(*reduce_full(f, g), h);
  r.differ = !graph_equal(r.right, r.left, 0.0);
  return r;
}

inline Morphism random_iso(Rng& rng, const VertexSet& source, const VertexSet& target) {
  std::vector<Vertex> image(target.begin(), target.end());
  std::shuffle(image.begin(), image.end(), rng);
  std::map<Vertex, Vertex> m;
  std::size_t i = 0;
  for (Vertex s : source) m[s] = image[i++];
  return iso_morphism([m](Vertex v) { return m.at(v); }, source);
}

inline Morphism random_morphism(Rng& rng, const VertexSet& source, const VertexSet& target) {
  VertexSet carrier;
  for (Vertex s : source) carrier.insert(psi0(s));
  for (Vertex t : target) carrier.insert(psi1(t));
  return Morphism(source, target,
                  Project(uniform_real(rng, 0.0, 1.0), random_graph(rng, carrier, carrier.size() + 1, 0.1, 1.0)));
}

// Identity and associativity of composition, exact.
inline SuiteReport verify_category(const SuiteOptions& opt) {
  return detail::run_suite("category", opt, [&](Rng& rng, std::size_t) -> std::string {
    const std::size_t size = uniform_index(rng, 0, std::min<std::size_t>(detail::vertex_bound(opt), 5));
    VertexSet objects[4];
    for (auto& o : objects) o = random_vertices(rng, size, 4 * size + 4);
    const Morphism f = random_iso(rng, objects[0], objects[1]);
    const Morphism g = random_iso(rng, objects[1], objects[2]);
    const Morphism h = random_iso(rng, objects[2], objects[3]);
    if (!morphism_equal(compose(compose(f, g), h), compose(f, compose(g, h)))) {
      return "composition is not associative";
    }
    const Morphism k = random_morphism(rng, objects[0], random_vertices(rng, uniform_index(rng, 0, 4), 12));
    if (!morphism_equal(compose(identity_morphism(k.source()), k), k)) return "left identity";
    if (!morphism_equal(compose(k, identity_morphism(k.target())), k)) return "right identity";
    return "";
  });
}

// Consistency, compositionality, the characterization of success and the
// splitting of successful projects over a partition.
inline SuiteReport verify_truth(const SuiteOptions& opt) {
  return detail::run_suite("truth", opt, [&](Rng& rng, std::size_t) -> std::string {
    const std::size_t n = std::max<std::size_t>(detail::vertex_bound(opt), 2);
    const VertexSet carrier = random_vertices(rng, uniform_index(rng, 2, n), 2 * n);
    const Project f(0.0, matching_graph(carrier, random_matching(rng, carrier)));
    const Project g(0.0, matching_graph(carrier, random_matching(rng, carrier)));
    if (!is_successful(f).successful) return "matching project is not successful";
    const double ia = interaction(f, g);
    if (orthogonal(f, g) || !(ia == 0.0 || std::isinf(ia))) {
      return "successful projects with interaction " + detail::number(ia);
    }

    // Compositionality: a on a part V_A of the carrier.
    VertexSet va;
    for (Vertex v : carrier)
      if (coin(rng)) va.insert(v);
    const Project a(0.0, matching_graph(va, random_matching(rng, va)));
    if (!std::isinf(measure_exact(f.graph(), a.graph()).value)) {
      if (!is_successful(cut(f, a)).successful) return "cut of successful projects is not successful";
    }

    // Verdict against the transposition-union shape, on perturbed graphs.
    WeightedGraph perturbed = f.graph();
    const std::vector<Vertex> vs(carrier.begin(), carrier.end());
    const std::size_t extra = uniform_index(rng, 0, 2);
    for (std::size_t e = 0; e < extra; ++e) {
      const Vertex x = vs[uniform_index(rng, 0, vs.size() - 1)];
      const Vertex y = vs[uniform_index(rng, 0, vs.size() - 1)];
      perturbed.add_edge(x, y, coin(rng) ? 1.0 : uniform_real(rng, 0.1, 0.9));
    }
    const Project p(0.0, perturbed);
    if (is_successful(p).successful != is_transposition_union(simplify(perturbed))) {
      return "success verdict disagrees with the transposition shape";
    }

    // Splitting over a random partition.
    VertexSet left, right;
    for (Vertex v : carrier) (coin(rng) ? left : right).insert(v);
    const SplitResult split = split_successful_tensor(f, left, right);
    if (split.parts) {
      if (!project_equal(tensor(split.parts->first, split.parts->second), f, 0.0)) {
        return "the parts do not recompose the project";
      }
    } else if (!split.counter_test || !std::isinf(measure_exact(f.graph(), split.counter_test->graph()).value)) {
      return "crossing edge without an infinite counter-test";
    }
    return "";
  });
}

// Checks one proof: successful interpretation, orthogonal to every switching
// test, equal to the interpretation of its cut-free form.
inline std::string check_soundness(const logic::ProofNode& p, const logic::Basis& basis) {
  const logic::Sequent s = logic::check_proof(p, basis);
  const Project f = logic::interpret(p, basis);
  if (!is_successful(f).successful) return "interpretation is not successful";
  std::size_t i = 0;
  for (const Project& t : logic::switching_tests(s, basis, f)) {
    if (!orthogonal(f, t)) return "not orthogonal to switching test " + std::to_string(i);
    ++i;
  }
  const logic::ProofPtr normal = logic::normalize(std::make_shared<logic::ProofNode>(p));
  if (logic::has_cut(*normal)) return "normal form has a cut";
  if (!logic::sequent_equal(logic::check_proof(*normal, basis), s)) return "normal form changes the conclusion";
  const Project g = logic::interpret(*normal, basis);
  if (f.wager() != g.wager() || !graph_equal(f.graph(), g.graph(), 0.0)) {
    return "interpretation changes under cut elimination";
  }
  return "";
}

// Random proofs of at most 12 rules besides exchanges.
inline SuiteReport verify_soundness(const SuiteOptions& opt) {
  const logic::Basis basis = logic::random_proof_basis();
  return detail::run_suite("soundness", opt, [&](Rng& rng, std::size_t) -> std::string {
    logic::ProofGenerator gen(rng, basis);
    const logic::ProofPtr p = gen.generate(12);
    const std::string why = check_soundness(*p, basis);
    return why.empty() ? why : why + ": " + logic::write_term(*p);
  });
}

}  // namespace goi
