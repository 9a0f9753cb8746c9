#pragma once

// Switching tests. A switching picks one premise of every ⅋ of a sequent.
// Together with the axiom links of a proof it determines trips through the
// formula forest; each trip becomes a permutation of the atom vertices, and
// the test is the graph of that permutation with one edge per component of
// the switching graph lowered to weight 1/2.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "goi/logic/proof.hpp"

namespace goi::logic {

namespace detail {

struct ForestNode {
  const Formula* formula = nullptr;
  std::size_t parent = SIZE_MAX;
  std::size_t left = SIZE_MAX;
  std::size_t right = SIZE_MAX;
  std::vector<Vertex> vertices;  // atoms only
};

struct Forest {
  std::vector<ForestNode> nodes;
  std::vector<std::size_t> pars;   // ⅋ nodes in preorder
  std::vector<std::size_t> atoms;  // atom nodes in preorder

  std::size_t add(const Formula& f, std::size_t parent, const Basis& basis) {
    const std::size_t id = nodes.size();
    nodes.push_back({&f, parent, SIZE_MAX, SIZE_MAX, {}});
    if (is_atom(f)) {
      nodes[id].vertices = atom_vertices(basis, f.name, f.j);
      atoms.push_back(id);
    } else if (f.left) {
      if (f.kind == FormulaKind::Par) pars.push_back(id);
      const std::size_t l = add(*f.left, id, basis);
      const std::size_t r = add(*f.right, id, basis);
      nodes[id].left = l;
      nodes[id].right = r;
    }
    return id;
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Axiom links read off the matching f: the atom of each vertex's partner.
// Throws InvalidArgument when f does not link whole atoms.
inline std::vector<std::size_t> atom_links(const detail::Forest& forest, const Project& f) {
  std::map<Vertex, std::pair<std::size_t, std::size_t>> owner;  // vertex -> (node, channel)
  for (std::size_t a : forest.atoms) {
    const auto& vs = forest.nodes[a].vertices;
    for (std::size_t x = 0; x < vs.size(); ++x) owner[vs[x]] = {a, x};
  }
  std::map<Vertex, Vertex> partner;
  const SimpleGraph simple = simplify(f.graph());
  for (const auto& [key, w] : simple.weights()) {
    if (!partner.emplace(key.first, key.second).second) {
      throw InvalidArgument("the project is not a matching of atom vertices");
    }
  }
  std::vector<std::size_t> link(forest.nodes.size(), SIZE_MAX);
  for (std::size_t a : forest.atoms) {
    const auto& vs = forest.nodes[a].vertices;
    std::size_t target = SIZE_MAX;
    for (std::size_t x = 0; x < vs.size(); ++x) {
      const auto p = partner.find(vs[x]);
      if (p == partner.end() || !owner.count(p->second)) {
        throw InvalidArgument("vertex " + std::to_string(vs[x]) + " is not linked to an atom");
      }
      const auto [node, channel] = owner.at(p->second);
      if (channel != x || (target != SIZE_MAX && node != target)) {
        throw InvalidArgument("the project does not link atoms channel by channel");
      }
      target = node;
    }
    link[a] = target;
  }
  return link;
}

inline std::size_t switching_count(const Sequent& s) {
  std::size_t pars = 0;
  std::function<void(const Formula&)> go = [&](const Formula& f) {
    if (f.kind == FormulaKind::Par) ++pars;
    if (f.left) {
      go(*f.left);
      go(*f.right);
    }
  };
  for (const auto& f : s) go(*f);
  return std::size_t{1} << pars;
}

// One test per switching, in the order of the bit masks over the ⅋ nodes in
// preorder (bit clear: left premise). `f` supplies the axiom links.
inline std::vector<Project> switching_tests(const Sequent& s, const Basis& basis, const Project& f) {
  detail::Forest forest;
  std::vector<std::size_t> roots;
  for (const auto& a : s) roots.push_back(forest.add(*a, SIZE_MAX, basis));
  if (forest.pars.size() > 20) throw InvalidArgument("too many ⅋ nodes for switching tests");
  const std::vector<std::size_t> link = atom_links(forest, f);
  const VertexSet carrier = sequent_location(s, basis);
  const std::size_t n = forest.nodes.size();

  std::vector<Project> tests;
  for (std::size_t mask = 0; mask < (std::size_t{1} << forest.pars.size()); ++mask) {
    std::vector<bool> right(n, false);
    for (std::size_t b = 0; b < forest.pars.size(); ++b) right[forest.pars[b]] = (mask >> b) & 1;

    // Components of the switching graph.
    detail::UnionFind uf(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto& node = forest.nodes[v];
      if (node.left == SIZE_MAX) continue;
      if (node.formula->kind == FormulaKind::Tensor) {
        uf.join(v, node.left);
        uf.join(v, node.right);
      } else {
        uf.join(v, right[v] ? node.right : node.left);
      }
    }
    for (std::size_t a : forest.atoms) uf.join(a, link[a]);

    // Trip: state (node, up). Going down from an atom ends at an atom going up.
    auto step = [&](std::size_t v, bool up) -> std::pair<std::size_t, bool> {
      const auto& node = forest.nodes[v];
      if (up) {
        if (node.left == SIZE_MAX) return {v, false};  // units bounce
        if (node.formula->kind == FormulaKind::Par && right[v]) return {node.right, true};
        return {node.left, true};
      }
      if (node.parent == SIZE_MAX) return {v, true};
      const std::size_t p = node.parent;
      const auto& pn = forest.nodes[p];
      const bool from_left = pn.left == v;
      if (pn.formula->kind == FormulaKind::Tensor) {
        return from_left ? std::make_pair(pn.right, true) : std::make_pair(p, false);
      }
      const bool chosen = right[p] ? !from_left : from_left;
      return chosen ? std::make_pair(p, false) : std::make_pair(v, true);
    };

    WeightedGraph g(carrier);
    std::vector<bool> done(n, false);
    std::vector<std::tuple<Vertex, Vertex, std::size_t>> edges;  // src, dst, component
    for (std::size_t start : forest.atoms) {
      if (done[start]) continue;
      // Items (entry atom, exit atom) of the cycle through `start` going down.
      std::vector<std::pair<std::size_t, std::size_t>> items;
      std::size_t exit = start;
      do {
        done[exit] = true;
        auto [v, up] = step(exit, false);
        while (!(up && is_atom(*forest.nodes[v].formula))) std::tie(v, up) = step(v, up);
        items.emplace_back(v, link[v]);
        exit = link[v];
      } while (exit != start);
      // Channels round by round, so atoms of different sizes share one cycle.
      std::vector<std::pair<std::size_t, std::size_t>> order;  // (item, channel)
      std::size_t max_size = 0;
      for (const auto& it : items) max_size = std::max(max_size, forest.nodes[it.first].vertices.size());
      for (std::size_t r = 0; r < max_size; ++r)
        for (std::size_t k = 0; k < items.size(); ++k)
          if (r < forest.nodes[items[k].first].vertices.size()) order.emplace_back(k, r);
      for (std::size_t i = 0; i < order.size(); ++i) {
        const auto [k, r] = order[i];
        const auto [k2, r2] = order[(i + 1) % order.size()];
        const Vertex src = forest.nodes[items[k].second].vertices[r];
        const Vertex dst = forest.nodes[items[k2].first].vertices[r2];
        edges.emplace_back(src, dst, uf.find(items[k].second));
      }
    }
    std::sort(edges.begin(), edges.end());
    std::set<std::size_t> lowered;
    for (const auto& [src, dst, comp] : edges) {
      g.add_edge(src, dst, lowered.insert(comp).second ? 0.5 : 1.0);
    }
    tests.emplace_back(forest.atoms.empty() ? 1.0 : 0.0, std::move(g));
  }
  return tests;
}

inline std::vector<Project> switching_tests(const ProofNode& p, const Basis& basis) {
  return switching_tests(check_proof(p, basis), basis, interpret(p, basis));
}

}  // namespace goi::logic
