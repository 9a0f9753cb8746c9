#pragma once

// The *-autonomous category of conducts, at the level that can be executed:
// the bijections on naturals that build it, morphism bodies and their
// composition and tensor, and pointwise checks of the coherence laws.
//
// Pairs (x, i) with i in {0,1,2} are stored as 3x + i inside morphism
// bodies. The paper's phi, (x,i) -> 2x+i, is applied only where it appears.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "goi/project.hpp"

namespace goi {

using NatMap = std::function<Vertex(Vertex)>;

inline Vertex tag(Vertex x, unsigned i) { return 3 * x + i; }
inline Vertex untag(Vertex v) { return v / 3; }
inline unsigned tag_of(Vertex v) { return static_cast<unsigned>(v % 3); }

inline Vertex phi(Vertex x, unsigned i) { return 2 * x + i; }
inline std::pair<Vertex, unsigned> phi_inverse(Vertex n) {
  return {n / 2, static_cast<unsigned>(n % 2)};
}

inline Vertex gamma_map(Vertex n) { return n % 2 == 0 ? n + 1 : n - 1; }

inline Vertex alpha_map(Vertex n) {
  if (n % 2 == 0) return 2 * n;
  if (n % 4 == 1) return n + 1;
  return (n - 1) / 2;
}

inline Vertex alpha_inverse(Vertex m) {
  if (m % 4 == 0) return m / 2;
  if (m % 4 == 2) return m - 1;
  return 2 * m + 1;
}

// lambda = rho = pi o phi^{-1}
inline Vertex unitor_map(Vertex n) { return phi_inverse(n).first; }

// f (x) g on naturals through phi: even positions to f, odd to g.
inline NatMap tensor_maps(NatMap f, NatMap g) {
  return [f = std::move(f), g = std::move(g)](Vertex n) {
    return n % 2 == 0 ? 2 * f(n / 2) : 2 * g(n / 2) + 1;
  };
}

inline NatMap identity_map() {
  return [](Vertex n) { return n; };
}

inline NatMap compose_maps(NatMap second, NatMap first) {
  return [second = std::move(second), first = std::move(first)](Vertex n) {
    return second(first(n));
  };
}

// Bijections on tagged pairs.
inline Vertex psi0(Vertex x) { return tag(x, 0); }
inline Vertex psi1(Vertex x) { return tag(x, 1); }
inline Vertex mu_map(Vertex v) {
  if (tag_of(v) == 2) throw DelocationError("mu is defined on tags 0 and 1 only");
  return v + 1;
}
inline Vertex nu_map(Vertex v) {
  if (tag_of(v) == 1) throw DelocationError("nu is defined on tags 0 and 2 only");
  return tag_of(v) == 0 ? v : v - 1;
}
// tau on pairs (n, i): (2x+1, 0) <-> (2x, 1).
inline std::pair<Vertex, unsigned> tau_map(Vertex n, unsigned i) {
  if (i == 0 && n % 2 == 1) return {n - 1, 1};
  if (i == 1 && n % 2 == 0) return {n + 1, 0};
  return {n, i};
}

struct NatBijection {
  std::string name;
  NatMap forward;
};

// The maps of the construction as maps on naturals. Maps on pairs are
// exposed through the tagged encoding 3x+i.
inline std::vector<NatBijection> standard_bijections() {
  return {
      {"psi0", [](Vertex x) { return psi0(x); }},
      {"psi1", [](Vertex x) { return psi1(x); }},
      {"mu", [](Vertex v) { return mu_map(v); }},
      {"nu", [](Vertex v) { return nu_map(v); }},
      {"phi", [](Vertex v) { return phi(untag(v), tag_of(v)); }},
      {"tau",
       [](Vertex v) {
         const auto [n, i] = tau_map(untag(v), tag_of(v));
         return tag(n, i);
       }},
      {"gamma", [](Vertex n) { return gamma_map(n); }},
      {"alpha", [](Vertex n) { return alpha_map(n); }},
      {"pi", [](Vertex v) { return untag(v); }},
  };
}

inline VertexSet image_of(const VertexSet& s, const NatMap& f) {
  VertexSet out;
  for (Vertex v : s) out.insert(f(v));
  return out;
}

// Carrier of A (x) B as a set of naturals.
inline VertexSet tensor_carrier(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  for (Vertex x : a) out.insert(phi(x, 0));
  for (Vertex y : b) out.insert(phi(y, 1));
  return out;
}

// Same encoding; the linear implication A -o B has this carrier too.
inline VertexSet arrow_carrier(const VertexSet& a, const VertexSet& b) {
  return tensor_carrier(a, b);
}

// A morphism S -> T: a project on psi0(S) u psi1(T).
class Morphism {
 public:
  Morphism(VertexSet source, VertexSet target, Project body)
      : source_(std::move(source)), target_(std::move(target)), body_(std::move(body)) {
    VertexSet expected;
    for (Vertex s : source_) expected.insert(psi0(s));
    for (Vertex t : target_) expected.insert(psi1(t));
    if (expected != body_.carrier()) {
      throw CarrierError("morphism body is not located on psi0(source) u psi1(target)");
    }
  }

  const VertexSet& source() const noexcept { return source_; }
  const VertexSet& target() const noexcept { return target_; }
  const Project& body() const noexcept { return body_; }

 private:
  VertexSet source_;
  VertexSet target_;
  Project body_;
};

inline bool morphism_equal(const Morphism& a, const Morphism& b, double tol = 0.0) {
  return a.source() == b.source() && a.target() == b.target() &&
         project_equal(a.body(), b.body(), tol);
}

// Fax over (x,0) -> (f(x),1); f must be injective on S.
inline Morphism iso_morphism(const NatMap& f, const VertexSet& s) {
  std::map<Vertex, Vertex> m;
  for (Vertex x : s) m[psi0(x)] = psi1(f(x));
  return Morphism(s, image_of(s, f), fax(Delocation(std::move(m))));
}

inline Morphism identity_morphism(const VertexSet& s) { return iso_morphism(identity_map(), s); }

// g o f = nu(f :: mu(g))
inline Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.target() != g.source()) throw CarrierError("composition needs target(f) = source(g)");
  const Project moved = delocate(g.body(), Delocation::from_function(g.body().carrier(), mu_map));
  const Project reduced = cut(f.body(), moved);
  return Morphism(f.source(), g.target(),
                  delocate(reduced, Delocation::from_function(reduced.carrier(), nu_map)));
}

// f (x) g = tau(psi0(phi(f)) (x) psi1(phi(g)))
inline Morphism tensor_morphisms(const Morphism& f, const Morphism& g) {
  auto place = [](unsigned side) {
    return [side](Vertex v) {
      const auto [n, i] = tau_map(phi(untag(v), tag_of(v)), side);
      return tag(n, i);
    };
  };
  const Project left = delocate(f.body(), Delocation::from_function(f.body().carrier(), place(0)));
  const Project right = delocate(g.body(), Delocation::from_function(g.body().carrier(), place(1)));
  return Morphism(tensor_carrier(f.source(), g.source()), tensor_carrier(f.target(), g.target()),
                  tensor(left, right));
}

// A (x) B on projects: phi(psi0(a) (x) psi1(b)).
inline Project tensor_objects(const Project& a, const Project& b) {
  return tensor(delocate(a, Delocation::from_function(a.carrier(), [](Vertex x) { return phi(x, 0); })),
                delocate(b, Delocation::from_function(b.carrier(), [](Vertex x) { return phi(x, 1); })));
}

struct CoherenceFailure {
  std::string law;
  Vertex point = 0;
};

struct CoherenceReport {
  std::size_t points_checked = 0;
  std::size_t samples_checked = 0;
  std::vector<CoherenceFailure> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline void check_pointwise(CoherenceReport& r, const std::string& law, Vertex window,
                            const NatMap& lhs, const NatMap& rhs,
                            const std::function<bool(Vertex)>& in_domain = {}) {
  for (Vertex n = 0; n < window; ++n) {
    if (in_domain && !in_domain(n)) continue;
    ++r.points_checked;
    if (lhs(n) != rhs(n)) r.failures.push_back({law, n});
  }
}

inline VertexSet random_carrier(std::mt19937_64& rng, std::size_t max_size, Vertex bound) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::uniform_int_distribution<Vertex> value(0, bound);
  VertexSet s;
  const std::size_t n = size(rng);
  while (s.size() < n) s.insert(value(rng));
  return s;
}

inline Project random_sample_project(std::mt19937_64& rng, const VertexSet& carrier) {
  std::uniform_real_distribution<double> w(0.1, 1.0);
  std::uniform_real_distribution<double> wager(0.0, 1.0);
  WeightedGraph g(carrier);
  const std::vector<Vertex> vs(carrier.begin(), carrier.end());
  if (!vs.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    const std::size_t edges = vs.size() + 1;
    for (std::size_t e = 0; e < edges; ++e) g.add_edge(vs[pick(rng)], vs[pick(rng)], w(rng));
  }
  return Project(wager(rng), std::move(g));
}

}  // namespace detail

// Pointwise coherence on [0, window) and carrier/graph-level checks on
// seeded sample projects.
inline CoherenceReport check_coherence_samples(std::uint64_t seed, Vertex window = Vertex{1} << 16,
                                               std::size_t samples = 16) {
  CoherenceReport r;
  const NatMap alpha = alpha_map;
  const NatMap alpha_inv = alpha_inverse;
  const NatMap gamma = gamma_map;
  const NatMap id = identity_map();

  detail::check_pointwise(r, "alpha inverse", window, compose_maps(alpha_inv, alpha), id);
  detail::check_pointwise(r, "gamma involution", window, compose_maps(gamma, gamma), id);
  // A(B(CD)) -> ((AB)C)D both ways round the pentagon.
  detail::check_pointwise(
      r, "pentagon", window, compose_maps(alpha, alpha),
      compose_maps(tensor_maps(alpha, id), compose_maps(alpha, tensor_maps(id, alpha))));
  // (AB)C -> B(CA), with a = alpha^{-1} as the associator (AB)C -> A(BC).
  detail::check_pointwise(
      r, "hexagon", window, compose_maps(alpha_inv, compose_maps(gamma, alpha_inv)),
      compose_maps(tensor_maps(id, gamma), compose_maps(alpha_inv, tensor_maps(gamma, id))));
  // A(BC) -> (CA)B.
  detail::check_pointwise(
      r, "inverse hexagon", window, compose_maps(alpha, compose_maps(gamma, alpha)),
      compose_maps(tensor_maps(gamma, id), compose_maps(alpha, tensor_maps(id, gamma))));
  // A(1B) -> AB, defined where the unit occupies no position.
  detail::check_pointwise(
      r, "triangle", window, compose_maps(tensor_maps(unitor_map, id), alpha),
      tensor_maps(id, unitor_map), [](Vertex n) { return n % 2 == 0 || n % 4 == 3; });
  detail::check_pointwise(
      r, "left unitor", window, [](Vertex n) { return unitor_map(phi(n, 1)); }, id);
  detail::check_pointwise(
      r, "right unitor", window, [](Vertex n) { return unitor_map(phi(n, 0)); }, id);
  // A -> (A -o bot) -o bot is x -> 4x; bot has empty carrier.
  detail::check_pointwise(
      r, "double dual", window,
      [](Vertex x) {
        const VertexSet dd = arrow_carrier(arrow_carrier(VertexSet{x}, {}), {});
        return *dd.begin();
      },
      [](Vertex x) { return 4 * x; });

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ++r.samples_checked;
    const Project a = detail::random_sample_project(rng, detail::random_carrier(rng, 4, 50));
    const Project b = detail::random_sample_project(rng, detail::random_carrier(rng, 4, 50));
    const Project c = detail::random_sample_project(rng, detail::random_carrier(rng, 4, 50));
    const Project right_nested = tensor_objects(a, tensor_objects(b, c));
    const Project left_nested = tensor_objects(tensor_objects(a, b), c);
    const Project moved =
        delocate(right_nested, Delocation::from_function(right_nested.carrier(), alpha));
    // wagers are summed in a different order
    if (!project_equal(moved, left_nested, 1e-12)) r.failures.push_back({"alpha on projects", s});

    const Project swapped =
        delocate(tensor_objects(a, b), Delocation::from_function(
                                           tensor_objects(a, b).carrier(), gamma));
    if (!project_equal(swapped, tensor_objects(b, a), 0.0)) {
      r.failures.push_back({"gamma on projects", s});
    }

    const Project with_unit = tensor_objects(unit_project(), a);
    const Project back = delocate(with_unit, Delocation::from_function(with_unit.carrier(), unitor_map));
    if (!project_equal(back, a, 0.0)) r.failures.push_back({"unitor on projects", s});

    // gamma o gamma at morphism level is the identity on the tensor carrier.
    const VertexSet ab = tensor_carrier(a.carrier(), b.carrier());
    const Morphism g1 = iso_morphism(gamma, ab);
    const Morphism g2 = iso_morphism(gamma, g1.target());
    if (!morphism_equal(compose(g1, g2), identity_morphism(ab))) {
      r.failures.push_back({"gamma squared morphism", s});
    }
  }
  return r;
}

}  // namespace goi
