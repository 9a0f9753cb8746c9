#pragma once

// Located formulas of multiplicative linear logic. An atom X_i(j) of a name
// with size n occupies the vertices delta(i, m) for j*n <= m < (j+1)*n.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goi/error.hpp"
#include "goi/graph.hpp"
#include "goi/project.hpp"

namespace goi::logic {

// delta(n, m) = 2^n (2m + 1) - 1
inline std::uint64_t delta(std::uint64_t n, std::uint64_t m) {
  if (n >= 63 || m >= (std::uint64_t{1} << (62 - n))) {
    throw InvalidArgument("delta(" + std::to_string(n) + ", " + std::to_string(m) +
                          ") does not fit in 64 bits");
  }
  return (std::uint64_t{1} << n) * (2 * m + 1) - 1;
}

struct DeltaPair {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
};

inline DeltaPair delta_inverse(std::uint64_t v) {
  std::uint64_t x = v + 1;
  DeltaPair p;
  while (x % 2 == 0) {
    x /= 2;
    ++p.n;
  }
  p.m = (x - 1) / 2;
  return p;
}

struct VarInfo {
  std::string name;
  std::uint64_t index = 0;
  std::uint64_t size = 1;
  std::vector<Project> tests;  // projects on {0, ..., size-1}
};

class Basis {
 public:
  // Declares a name. Names of the form X<digits> take their digits as index;
  // other names get the smallest index not yet taken.
  const VarInfo& declare(const std::string& name, std::uint64_t size = 1) {
    if (size < 1) throw InvalidArgument("variable size must be at least 1");
    if (auto it = vars_.find(name); it != vars_.end()) {
      it->second.size = size;
      return it->second;
    }
    const std::uint64_t index = explicit_index(name).value_or(smallest_free());
    for (const auto& [other, info] : vars_) {
      if (info.index == index) {
        throw InvalidArgument("variable names " + other + " and " + name + " share index " +
                              std::to_string(index));
      }
    }
    VarInfo& v = vars_[name];
    v.name = name;
    v.index = index;
    v.size = size;
    return v;
  }

  void add_test(const std::string& name, Project test) {
    VarInfo& v = vars_.at(name);
    VertexSet expected;
    for (std::uint64_t x = 0; x < v.size; ++x) expected.insert(x);
    if (test.carrier() != expected) throw CarrierError("basis test has the wrong carrier");
    v.tests.push_back(std::move(test));
  }

  bool contains(const std::string& name) const { return vars_.count(name) != 0; }

  const VarInfo& at(const std::string& name) const {
    const auto it = vars_.find(name);
    if (it == vars_.end()) throw InvalidArgument("unknown variable name " + name);
    return it->second;
  }

  const VarInfo& by_index(std::uint64_t index) const {
    for (const auto& [name, info] : vars_) {
      if (info.index == index) return info;
    }
    throw InvalidArgument("no variable with index " + std::to_string(index));
  }

  const std::map<std::string, VarInfo>& vars() const { return vars_; }

  static std::optional<std::uint64_t> explicit_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'X') return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    return v;
  }

 private:
  std::uint64_t smallest_free() const {
    std::uint64_t candidate = 0;
    for (;;) {
      bool used = false;
      for (const auto& [name, info] : vars_) used = used || info.index == candidate;
      if (!used) return candidate;
      ++candidate;
    }
  }

  std::map<std::string, VarInfo> vars_;
};

enum class FormulaKind { Var, NegVar, Tensor, Par, One, Bottom };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::One;
  std::string name;       // atoms
  std::uint64_t j = 0;    // atoms
  FormulaPtr left, right; // binary connectives
};

inline FormulaPtr make_atom(const std::string& name, std::uint64_t j, bool negative) {
  return std::make_shared<const Formula>(
      Formula{negative ? FormulaKind::NegVar : FormulaKind::Var, name, j, nullptr, nullptr});
}
inline FormulaPtr make_binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  return std::make_shared<const Formula>(Formula{k, "", 0, std::move(a), std::move(b)});
}
inline FormulaPtr make_unit(FormulaKind k) {
  return std::make_shared<const Formula>(Formula{k, "", 0, nullptr, nullptr});
}

inline bool is_atom(const Formula& f) {
  return f.kind == FormulaKind::Var || f.kind == FormulaKind::NegVar;
}

// De Morgan duality, pushed to the atoms.
inline FormulaPtr dual(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Var: return make_atom(f->name, f->j, true);
    case FormulaKind::NegVar: return make_atom(f->name, f->j, false);
    case FormulaKind::Tensor: return make_binary(FormulaKind::Par, dual(f->left), dual(f->right));
    case FormulaKind::Par: return make_binary(FormulaKind::Tensor, dual(f->left), dual(f->right));
    case FormulaKind::One: return make_unit(FormulaKind::Bottom);
    case FormulaKind::Bottom: return make_unit(FormulaKind::One);
  }
  return f;
}

inline bool formula_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (is_atom(a)) return a.name == b.name && a.j == b.j;
  if (a.left) return formula_equal(*a.left, *b.left) && formula_equal(*a.right, *b.right);
  return true;
}

inline std::size_t formula_size(const Formula& f) {
  return f.left ? 1 + formula_size(*f.left) + formula_size(*f.right) : 1;
}

inline std::string to_string(const Formula& f, bool nested = false) {
  switch (f.kind) {
    case FormulaKind::Var: return f.name + "(" + std::to_string(f.j) + ")";
    case FormulaKind::NegVar: return f.name + "(" + std::to_string(f.j) + ")^⊥";
    case FormulaKind::One: return "1";
    case FormulaKind::Bottom: return "⊥";
    case FormulaKind::Tensor:
    case FormulaKind::Par: {
      const std::string op = f.kind == FormulaKind::Tensor ? " ⊗ " : " ⅋ ";
      const std::string body = to_string(*f.left, true) + op + to_string(*f.right, true);
      return nested ? "(" + body + ")" : body;
    }
  }
  return "?";
}

using Sequent = std::vector<FormulaPtr>;

inline std::string to_string(const Sequent& s) {
  std::string out = "⊢";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : " ") + to_string(*s[i]);
  return out;
}

inline bool sequent_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!formula_equal(*a[i], *b[i])) return false;
  return true;
}

// Vertices of the atom X_i(j), in channel order x = 0, ..., n-1.
inline std::vector<Vertex> atom_vertices(const Basis& basis, const std::string& name,
                                         std::uint64_t j) {
  const VarInfo& v = basis.at(name);
  std::vector<Vertex> out;
  for (std::uint64_t x = 0; x < v.size; ++x) out.push_back(delta(v.index, j * v.size + x));
  return out;
}

inline VertexSet formula_location(const Formula& f, const Basis& basis) {
  if (is_atom(f)) {
    const auto vs = atom_vertices(basis, f.name, f.j);
    return VertexSet(vs.begin(), vs.end());
  }
  if (!f.left) return {};
  const VertexSet a = formula_location(*f.left, basis);
  const VertexSet b = formula_location(*f.right, basis);
  if (!disjoint(a, b)) throw ProofError("subformulas of " + to_string(f) + " overlap");
  return vertex_union(a, b);
}

inline VertexSet sequent_location(const Sequent& s, const Basis& basis) {
  VertexSet out;
  for (const auto& f : s) {
    const VertexSet l = formula_location(*f, basis);
    if (!disjoint(out, l)) throw ProofError("formulas of " + to_string(s) + " overlap");
    out.insert(l.begin(), l.end());
  }
  return out;
}

}  // namespace goi::logic
