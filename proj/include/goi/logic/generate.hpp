#pragma once

// Random localized proofs. Every axiom takes fresh locations, so linearity
// and the disjointness side conditions hold by construction. Cuts are made
// against eta-expansions, which exercises the key cases of cut elimination.

#include <map>
#include <string>
#include <vector>

#include "goi/logic/proof.hpp"
#include "goi/random.hpp"

namespace goi::logic {

// X1 of size 1 and X2 of size 2.
inline Basis random_proof_basis() {
  Basis b;
  b.declare("X1", 1);
  b.declare("X2", 2);
  return b;
}

class ProofGenerator {
 public:
  ProofGenerator(Rng& rng, const Basis& basis) : rng_(rng), basis_(basis) {
    for (const auto& [name, info] : basis.vars()) names_.push_back(name);
  }

  // A proof with at most max_rules rules other than exchanges.
  ProofPtr generate(std::size_t max_rules) { return maybe_ex(gen(std::max<std::size_t>(max_rules, 1))); }

  // Proof of |- A', A^⊥ where A' is A at fresh locations.
  ProofPtr eta(const Formula& a) {
    switch (a.kind) {
      case FormulaKind::Var: return ax(a.name, fresh(a.name), a.j);
      case FormulaKind::NegVar: return ex(ax(a.name, a.j, fresh(a.name)), 0, 1);
      case FormulaKind::One: return bot(one());
      case FormulaKind::Bottom: return ex(bot(one()), 0, 1);
      case FormulaKind::Tensor: {
        ProofPtr t = tensor_rule(ex(eta(*a.left), 0, 1), ex(eta(*a.right), 0, 1));
        return par(ex(ex(t, 0, 2), 1, 2));
      }
      case FormulaKind::Par: {
        ProofPtr t = tensor_rule(eta(*a.left), eta(*a.right));
        return ex(par(ex(ex(t, 0, 2), 1, 2)), 0, 1);
      }
    }
    throw ProofError("unknown formula");
  }

 private:
  std::uint64_t fresh(const std::string& name) { return next_[name]++; }

  Sequent conclusion(const ProofPtr& p) { return check_proof(*p, basis_); }

  ProofPtr maybe_ex(ProofPtr p) {
    const std::size_t n = conclusion(p).size();
    if (n >= 2 && coin(rng_, 0.3)) {
      const std::size_t i = uniform_index(rng_, 0, n - 1);
      const std::size_t k = uniform_index(rng_, 0, n - 1);
      if (i != k) return ex(p, i, k);
    }
    return p;
  }

  ProofPtr leaf() {
    if (coin(rng_, 0.85)) {
      const std::string& name = names_[uniform_index(rng_, 0, names_.size() - 1)];
      const std::uint64_t j = fresh(name);
      return ax(name, j, fresh(name));
    }
    return one();
  }

  ProofPtr gen(std::size_t budget) {
    if (budget == 1) return leaf();
    // leaf, bot, par, tensor, mix, cut
    const std::vector<double> weights = {1.0, 1.0, 3.0, budget >= 3 ? 3.0 : 0.0,
                                         budget >= 3 ? 1.0 : 0.0, budget >= 3 ? 3.0 : 0.0};
    const std::size_t choice = std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(rng_);
    switch (choice) {
      case 0: return leaf();
      case 1: return bot(maybe_ex(gen(budget - 1)));
      case 2: {
        ProofPtr p = maybe_ex(gen(budget - 1));
        return conclusion(p).size() >= 2 ? par(p) : bot(p);
      }
      case 3:
      case 4: {
        const std::size_t k = uniform_index(rng_, 1, budget - 2);
        ProofPtr p = maybe_ex(gen(k));
        ProofPtr q = maybe_ex(gen(budget - 1 - k));
        return choice == 3 ? tensor_rule(p, q) : mix(p, q);
      }
      default: {
        const std::size_t k = uniform_index(rng_, 1, budget - 2);
        ProofPtr p = maybe_ex(gen(k));
        ProofPtr e = eta(*conclusion(p).back());
        if (logical_node_count(*p) + logical_node_count(*e) + 1 > budget) return p;
        return cut_rule(p, e);
      }
    }
  }

  Rng& rng_;
  const Basis& basis_;
  std::vector<std::string> names_;
  std::map<std::string, std::uint64_t> next_;
};

}  // namespace goi::logic
