#pragma once

// Cut elimination. Proofs are translated to a calculus where exchanges are
// explicit permutations, normalized there, and translated back.

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "goi/logic/proof.hpp"

namespace goi::logic {

namespace detail {

enum class IRule { Ax, One, Bot, Par, Tensor, Cut, Mix, Perm };

struct INode;
using IPtr = std::shared_ptr<const INode>;

struct INode {
  IRule rule = IRule::One;
  std::string name;
  std::uint64_t j = 0, j2 = 0;
  std::vector<std::size_t> sigma;  // Perm: new[k] = old[sigma[k]]
  std::vector<IPtr> premises;
  std::size_t size = 0;            // number of formulas in the conclusion
};

inline IPtr make_inode(IRule r, std::vector<IPtr> premises) {
  auto n = std::make_shared<INode>();
  n->rule = r;
  n->premises = std::move(premises);
  switch (r) {
    case IRule::Ax: n->size = 2; break;
    case IRule::One: n->size = 1; break;
    case IRule::Bot: n->size = n->premises[0]->size + 1; break;
    case IRule::Par: n->size = n->premises[0]->size - 1; break;
    case IRule::Tensor: n->size = n->premises[0]->size + n->premises[1]->size - 1; break;
    case IRule::Cut: n->size = n->premises[0]->size + n->premises[1]->size - 2; break;
    case IRule::Mix: n->size = n->premises[0]->size + n->premises[1]->size; break;
    case IRule::Perm: n->size = n->premises[0]->size; break;
  }
  return n;
}

inline IPtr make_iax(const std::string& name, std::uint64_t j, std::uint64_t j2) {
  auto n = std::make_shared<INode>();
  n->rule = IRule::Ax;
  n->name = name;
  n->j = j;
  n->j2 = j2;
  n->size = 2;
  return n;
}

inline IPtr make_perm(IPtr p, std::vector<std::size_t> sigma) {
  bool identity = true;
  for (std::size_t k = 0; k < sigma.size(); ++k) identity = identity && sigma[k] == k;
  if (identity) return p;
  if (p->rule == IRule::Perm) {
    std::vector<std::size_t> merged(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) merged[k] = p->sigma[sigma[k]];
    return make_perm(p->premises[0], std::move(merged));
  }
  auto n = std::make_shared<INode>();
  n->rule = IRule::Perm;
  n->sigma = std::move(sigma);
  n->premises = {std::move(p)};
  n->size = n->premises[0]->size;
  return n;
}

// Rearranges a conclusion whose positions carry the labels `have` into the
// order `want`.
inline IPtr arrange(IPtr p, const std::vector<int>& have, const std::vector<int>& want) {
  std::vector<std::size_t> sigma;
  for (int label : want) {
    sigma.push_back(static_cast<std::size_t>(std::find(have.begin(), have.end(), label) - have.begin()));
  }
  return make_perm(std::move(p), std::move(sigma));
}

inline std::vector<int> labels(int from, std::size_t count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

inline std::vector<int> without(std::vector<int> v, std::size_t pos) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
  return v;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline bool principal(const INode& p, std::size_t pos) {
  switch (p.rule) {
    case IRule::Ax:
    case IRule::One: return true;
    case IRule::Bot:
    case IRule::Par:
    case IRule::Tensor: return pos + 1 == p.size;
    default: return false;
  }
}

IPtr cut_free_cut(const IPtr& p, std::size_t pi, const IPtr& q, std::size_t qi);

// Γ\p, Δ\q from Δ\q, Γ\p.
inline IPtr mirrored(const IPtr& p, std::size_t pi, const IPtr& q, std::size_t qi) {
  IPtr r = cut_free_cut(q, qi, p, pi);
  const std::vector<int> delta = labels(0, q->size - 1);
  const std::vector<int> gamma = labels(1000000, p->size - 1);
  return arrange(r, concat(delta, gamma), concat(gamma, delta));
}

// Cut of P, with A at position pi, against Q, with A^⊥ at position qi. Both
// premises are cut-free; the conclusion is Γ\pi, Δ\qi.
inline IPtr cut_free_cut(const IPtr& p, std::size_t pi, const IPtr& q, std::size_t qi) {
  const int D = 1000000;  // labels of Δ\qi
  const std::vector<int> rest = labels(D, q->size - 1);
  if (p->rule == IRule::Perm) {
    const IPtr& p0 = p->premises[0];
    const std::size_t at = p->sigma[pi];
    IPtr r = cut_free_cut(p0, at, q, qi);
    // Label the remaining formulas by their position in P0.
    std::vector<int> have, want;
    for (std::size_t i = 0; i < p0->size; ++i)
      if (i != at) have.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < p->size; ++k)
      if (k != pi) want.push_back(static_cast<int>(p->sigma[k]));
    return arrange(r, concat(have, rest), concat(want, rest));
  }
  if (q->rule == IRule::Perm) return mirrored(p, pi, q, qi);

  if (!principal(*p, pi)) {
    switch (p->rule) {
      case IRule::Bot: {
        // Γ0, ⊥
        const IPtr& p0 = p->premises[0];
        IPtr r = make_inode(IRule::Bot, {cut_free_cut(p0, pi, q, qi)});
        const std::vector<int> g0 = without(labels(0, p0->size), pi);
        const int bot = -1;
        return arrange(r, concat(concat(g0, rest), {bot}), concat(concat(g0, {bot}), rest));
      }
      case IRule::Par: {
        // Γ1, B, C
        const IPtr& p0 = p->premises[0];
        IPtr r = cut_free_cut(p0, pi, q, qi);
        const std::vector<int> g1 = without(labels(0, p0->size - 2), pi);
        const int b = -1, c = -2, bc = -3;
        r = arrange(r, concat(concat(g1, {b, c}), rest), concat(concat(g1, rest), {b, c}));
        r = make_inode(IRule::Par, {r});
        return arrange(r, concat(concat(g1, rest), {bc}), concat(concat(g1, {bc}), rest));
      }
      case IRule::Tensor:
      case IRule::Mix: {
        const bool tensor = p->rule == IRule::Tensor;
        const IPtr& p1 = p->premises[0];
        const IPtr& p2 = p->premises[1];
        const std::size_t t = tensor ? 1 : 0;  // principal formulas per premise
        const std::size_t n1 = p1->size - t;
        const std::size_t n2 = p2->size - t;
        const int b = -1, c = -2, bc = -3;
        std::vector<int> g1 = labels(0, n1);
        std::vector<int> g2 = labels(static_cast<int>(n1), n2);
        IPtr left = p1, right = p2;
        if (pi < n1) {
          IPtr r = cut_free_cut(p1, pi, q, qi);
          g1 = without(g1, pi);
          if (tensor) r = arrange(r, concat(concat(g1, {b}), rest), concat(concat(g1, rest), {b}));
          left = r;
          IPtr m = make_inode(p->rule, {left, right});
          std::vector<int> have = concat(concat(g1, rest), g2);
          std::vector<int> want = concat(g1, g2);
          if (tensor) {
            have.push_back(bc);
            want.push_back(bc);
          }
          return arrange(m, have, concat(want, rest));
        }
        IPtr r = cut_free_cut(p2, pi - n1, q, qi);
        g2 = without(g2, pi - n1);
        if (tensor) r = arrange(r, concat(concat(g2, {c}), rest), concat(concat(g2, rest), {c}));
        right = r;
        IPtr m = make_inode(p->rule, {left, right});
        std::vector<int> have = concat(concat(g1, g2), rest);
        std::vector<int> want = concat(g1, g2);
        if (tensor) {
          have.push_back(bc);
          want.push_back(bc);
        }
        return arrange(m, have, concat(want, rest));
      }
      default: throw ProofError("cut elimination met an unexpected rule");
    }
  }
  if (!principal(*q, qi)) return mirrored(p, pi, q, qi);

  // Both formulas are principal.
  if (p->rule == IRule::Ax) {
    if (q->rule != IRule::Ax) return mirrored(p, pi, q, qi);
    if (pi == 0) {
      // ⊢ X(j), X(j2)^⊥ against ⊢ X(k), X(j)^⊥ gives ⊢ X(j2)^⊥, X(k)
      return make_perm(make_iax(p->name, q->j, p->j2), {1, 0});
    }
    return make_iax(p->name, p->j, q->j2);
  }
  if (p->rule == IRule::One) return q->premises.at(0);
  if (p->rule == IRule::Bot) return p->premises.at(0);
  if (p->rule == IRule::Tensor) {
    const IPtr& p1 = p->premises[0];
    const IPtr& p2 = p->premises[1];
    const IPtr& q0 = q->premises.at(0);
    // Γ2, Δ0, B^⊥ then Γ1, Γ2, Δ0
    IPtr r1 = cut_free_cut(p2, p2->size - 1, q0, q0->size - 1);
    return cut_free_cut(p1, p1->size - 1, r1, r1->size - 1);
  }
  return mirrored(p, pi, q, qi);
}

inline IPtr eliminate(const IPtr& p) {
  if (p->rule == IRule::Ax || p->rule == IRule::One) return p;
  std::vector<IPtr> premises;
  for (const auto& q : p->premises) premises.push_back(eliminate(q));
  if (p->rule == IRule::Cut) {
    return cut_free_cut(premises[0], premises[0]->size - 1, premises[1], premises[1]->size - 1);
  }
  if (p->rule == IRule::Perm) return make_perm(premises[0], p->sigma);
  return make_inode(p->rule, std::move(premises));
}

inline IPtr to_internal(const ProofNode& p) {
  switch (p.rule) {
    case Rule::Ax:
      if (!p.localized) throw ProofError("cannot normalize an axiom without locations");
      return make_iax(p.name, p.j, p.j2);
    case Rule::One: return make_inode(IRule::One, {});
    case Rule::Bot: return make_inode(IRule::Bot, {to_internal(*p.premises[0])});
    case Rule::Par: return make_inode(IRule::Par, {to_internal(*p.premises[0])});
    case Rule::Tensor:
    case Rule::Cut:
    case Rule::Mix: {
      const IRule r = p.rule == Rule::Tensor ? IRule::Tensor
                      : p.rule == Rule::Cut  ? IRule::Cut
                                             : IRule::Mix;
      return make_inode(r, {to_internal(*p.premises[0]), to_internal(*p.premises[1])});
    }
    case Rule::Ex: {
      IPtr q = to_internal(*p.premises[0]);
      std::vector<std::size_t> sigma(q->size);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::swap(sigma.at(p.a), sigma.at(p.b));
      return make_perm(q, std::move(sigma));
    }
  }
  throw ProofError("unknown rule");
}

inline ProofPtr to_surface(const INode& p) {
  switch (p.rule) {
    case IRule::Ax: return ax(p.name, p.j, p.j2);
    case IRule::One: return one();
    case IRule::Bot: return bot(to_surface(*p.premises[0]));
    case IRule::Par: return par(to_surface(*p.premises[0]));
    case IRule::Tensor: return tensor_rule(to_surface(*p.premises[0]), to_surface(*p.premises[1]));
    case IRule::Cut: return cut_rule(to_surface(*p.premises[0]), to_surface(*p.premises[1]));
    case IRule::Mix: return mix(to_surface(*p.premises[0]), to_surface(*p.premises[1]));
    case IRule::Perm: {
      ProofPtr out = to_surface(*p.premises[0]);
      std::vector<std::size_t> cur(p.size);
      std::iota(cur.begin(), cur.end(), 0);
      for (std::size_t k = 0; k < p.size; ++k) {
        const std::size_t m =
            static_cast<std::size_t>(std::find(cur.begin(), cur.end(), p.sigma[k]) - cur.begin());
        if (m != k) {
          out = ex(out, k, m);
          std::swap(cur[k], cur[m]);
        }
      }
      return out;
    }
  }
  throw ProofError("unknown rule");
}

}  // namespace detail

// A cut-free proof of the same conclusion. Cut-free input is returned as is.
inline ProofPtr normalize(const ProofPtr& p) {
  if (!has_cut(*p)) return p;
  return detail::to_surface(*detail::eliminate(detail::to_internal(*p)));
}

}  // namespace goi::logic
