#pragma once

// Proof terms, their concrete syntax, the side-condition checker and the
// interpretation of proofs as projects.
//
// Syntax (prefix terms; rules act on the last formulas of their premises):
//   (ax X j j')    |- X(j), X(j')^⊥        (ax X) before localization
//   (one)          |- 1
//   (bot P)        appends ⊥
//   (par P)        last two A, B become A ⅋ B
//   (tensor P Q)   |- Δ, Γ, A ⊗ B   for P |- Δ, A and Q |- Γ, B
//   (cut P Q)      |- Δ, Γ          for P |- Δ, A and Q |- Γ, A^⊥
//   (mix P Q)      |- Δ, Γ
//   (ex P i j)     swaps positions i and j
// Header lines `var <name> size <n>` may precede the term.

#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "goi/logic/formula.hpp"
#include "goi/project.hpp"

namespace goi::logic {

enum class Rule { Ax, One, Bot, Par, Tensor, Cut, Mix, Ex };

inline std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::One: return "one";
    case Rule::Bot: return "bot";
    case Rule::Par: return "par";
    case Rule::Tensor: return "tensor";
    case Rule::Cut: return "cut";
    case Rule::Mix: return "mix";
    case Rule::Ex: return "ex";
  }
  return "?";
}

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  Rule rule = Rule::One;
  std::string name;        // ax
  bool localized = true;   // ax: false for `(ax X)`
  std::uint64_t j = 0;     // ax: positive occurrence
  std::uint64_t j2 = 0;    // ax: negative occurrence
  std::size_t a = 0;       // ex
  std::size_t b = 0;       // ex
  std::vector<ProofPtr> premises;
};

inline ProofPtr ax(const std::string& name, std::uint64_t j, std::uint64_t j2) {
  auto n = std::make_shared<ProofNode>();
  n->rule = Rule::Ax;
  n->name = name;
  n->j = j;
  n->j2 = j2;
  return n;
}
inline ProofPtr ax_unlocalized(const std::string& name) {
  auto n = std::make_shared<ProofNode>();
  n->rule = Rule::Ax;
  n->name = name;
  n->localized = false;
  return n;
}
inline ProofPtr one() {
  auto n = std::make_shared<ProofNode>();
  n->rule = Rule::One;
  return n;
}
inline ProofPtr unary(Rule r, ProofPtr p) {
  auto n = std::make_shared<ProofNode>();
  n->rule = r;
  n->premises = {std::move(p)};
  return n;
}
inline ProofPtr bot(ProofPtr p) { return unary(Rule::Bot, std::move(p)); }
inline ProofPtr par(ProofPtr p) { return unary(Rule::Par, std::move(p)); }
inline ProofPtr binary(Rule r, ProofPtr p, ProofPtr q) {
  auto n = std::make_shared<ProofNode>();
  n->rule = r;
  n->premises = {std::move(p), std::move(q)};
  return n;
}
inline ProofPtr tensor_rule(ProofPtr p, ProofPtr q) { return binary(Rule::Tensor, p, q); }
inline ProofPtr cut_rule(ProofPtr p, ProofPtr q) { return binary(Rule::Cut, p, q); }
inline ProofPtr mix(ProofPtr p, ProofPtr q) { return binary(Rule::Mix, p, q); }
inline ProofPtr ex(ProofPtr p, std::size_t i, std::size_t k) {
  auto n = std::make_shared<ProofNode>();
  n->rule = Rule::Ex;
  n->a = i;
  n->b = k;
  n->premises = {std::move(p)};
  return n;
}

inline std::size_t node_count(const ProofNode& p) {
  std::size_t n = 1;
  for (const auto& q : p.premises) n += node_count(*q);
  return n;
}

// Nodes other than exchanges.
inline std::size_t logical_node_count(const ProofNode& p) {
  std::size_t n = p.rule == Rule::Ex ? 0 : 1;
  for (const auto& q : p.premises) n += logical_node_count(*q);
  return n;
}

inline bool has_cut(const ProofNode& p) {
  if (p.rule == Rule::Cut) return true;
  for (const auto& q : p.premises)
    if (has_cut(*q)) return true;
  return false;
}

inline void collect_names(const ProofNode& p, std::vector<std::string>& out) {
  if (p.rule == Rule::Ax && std::find(out.begin(), out.end(), p.name) == out.end()) {
    out.push_back(p.name);
  }
  for (const auto& q : p.premises) collect_names(*q, out);
}

inline std::string write_term(const ProofNode& p) {
  switch (p.rule) {
    case Rule::Ax:
      return p.localized ? "(ax " + p.name + " " + std::to_string(p.j) + " " +
                               std::to_string(p.j2) + ")"
                         : "(ax " + p.name + ")";
    case Rule::One: return "(one)";
    case Rule::Ex:
      return "(ex " + write_term(*p.premises[0]) + " " + std::to_string(p.a) + " " +
             std::to_string(p.b) + ")";
    default: {
      std::string s = "(" + rule_name(p.rule);
      for (const auto& q : p.premises) s += " " + write_term(*q);
      return s + ")";
    }
  }
}

struct ParsedProof {
  ProofPtr proof;
  Basis basis;
};

// Declares every name used by the proof: X<digits> names first, so that
// other names take the smallest indices left over.
inline void declare_names(const ProofNode& p, Basis& basis) {
  std::vector<std::string> names;
  collect_names(p, names);
  for (const auto& n : names)
    if (!basis.contains(n) && Basis::explicit_index(n)) basis.declare(n);
  for (const auto& n : names)
    if (!basis.contains(n)) basis.declare(n);
}

inline std::string write_proof(const ParsedProof& pp) {
  std::string out;
  for (const auto& [name, info] : pp.basis.vars()) {
    out += "var " + name + " size " + std::to_string(info.size) + "\n";
  }
  return out + write_term(*pp.proof) + "\n";
}

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  ParsedProof parse() {
    ParsedProof out;
    skip_space();
    while (peek_word() == "var") {
      const auto [l, c] = std::make_pair(line_, col_);
      word();
      const std::string name = identifier();
      if (word() != "size") throw ParseError("expected 'size'", line_, col_);
      const std::uint64_t size = number();
      if (size < 1) throw ParseError("variable size must be at least 1", l, c);
      try {
        out.basis.declare(name, size);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), l, c);
      }
      skip_space();
    }
    out.proof = term();
    skip_space();
    if (pos_ < text_.size()) throw ParseError("unexpected text after the proof term", line_, col_);
    declare_names(*out.proof, out.basis);
    return out;
  }

 private:
  ProofPtr term() {
    skip_space();
    expect('(');
    const std::size_t l = line_, c = col_;
    const std::string head = word();
    ProofPtr result;
    if (head == "ax") {
      const std::string name = identifier();
      skip_space();
      if (peek() == ')') {
        result = ax_unlocalized(name);
      } else {
        const std::uint64_t j = number();
        const std::uint64_t j2 = number();
        result = ax(name, j, j2);
      }
    } else if (head == "one") {
      result = one();
    } else if (head == "bot" || head == "par") {
      result = unary(head == "bot" ? Rule::Bot : Rule::Par, term());
    } else if (head == "tensor" || head == "cut" || head == "mix") {
      const Rule r = head == "tensor" ? Rule::Tensor : head == "cut" ? Rule::Cut : Rule::Mix;
      ProofPtr p = term();
      ProofPtr q = term();
      result = binary(r, p, q);
    } else if (head == "ex") {
      ProofPtr p = term();
      const std::size_t i = number();
      const std::size_t k = number();
      result = ex(p, i, k);
    } else {
      throw ParseError("unknown rule '" + head + "'", l, c);
    }
    skip_space();
    expect(')');
    return result;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    if (peek() != ch) {
      throw ParseError(std::string("expected '") + ch + "'", line_, col_);
    }
    advance();
  }

  std::string_view peek_word() const {
    std::size_t e = pos_;
    while (e < text_.size() && std::isalnum(static_cast<unsigned char>(text_[e]))) ++e;
    return text_.substr(pos_, e - pos_);
  }

  std::string word() {
    skip_space();
    std::string w;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      w += peek();
      advance();
    }
    if (w.empty()) throw ParseError("expected a word", line_, col_);
    return w;
  }

  std::string identifier() {
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      throw ParseError("expected a variable name", line_, col_);
    }
    return word();
  }

  std::uint64_t number() {
    skip_space();
    const std::size_t l = line_, c = col_;
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty()) throw ParseError("expected a number", l, c);
    if (digits.size() > 18) throw ParseError("number too large", l, c);
    return std::stoull(digits);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

inline ParsedProof parse_proof(std::string_view text) { return detail::TermParser(text).parse(); }

namespace detail {

struct Checker {
  const Basis& basis;
  std::set<std::tuple<std::string, std::uint64_t, bool>> occurrences;
  std::size_t counter = 0;

  [[noreturn]] void fail(std::size_t node, Rule r, const std::string& msg) {
    throw ProofError("node " + std::to_string(node) + " (" + rule_name(r) + "): " + msg);
  }

  void occur(std::size_t node, const std::string& name, std::uint64_t j, bool negative) {
    if (!occurrences.emplace(name, j, negative).second) {
      fail(node, Rule::Ax,
           name + "(" + std::to_string(j) + ")" + (negative ? "^⊥" : "") +
               " already appears in another axiom");
    }
  }

  VertexSet location(const Sequent& s, std::size_t from, std::size_t to) {
    VertexSet out;
    for (std::size_t i = from; i < to; ++i) {
      const VertexSet l = formula_location(*s[i], basis);
      out.insert(l.begin(), l.end());
    }
    return out;
  }

  Sequent check(const ProofNode& p) {
    const std::size_t id = counter++;
    switch (p.rule) {
      case Rule::Ax: {
        if (!p.localized) fail(id, p.rule, "axiom is not localized");
        if (!basis.contains(p.name)) fail(id, p.rule, "unknown variable name " + p.name);
        if (p.j == p.j2) fail(id, p.rule, "axiom needs j != j'");
        occur(id, p.name, p.j, false);
        occur(id, p.name, p.j2, true);
        return {make_atom(p.name, p.j, false), make_atom(p.name, p.j2, true)};
      }
      case Rule::One: return {make_unit(FormulaKind::One)};
      case Rule::Bot: {
        Sequent s = check(*p.premises[0]);
        s.push_back(make_unit(FormulaKind::Bottom));
        return s;
      }
      case Rule::Par: {
        Sequent s = check(*p.premises[0]);
        if (s.size() < 2) fail(id, p.rule, "needs two formulas");
        FormulaPtr b = s.back();
        s.pop_back();
        FormulaPtr a = s.back();
        s.pop_back();
        s.push_back(make_binary(FormulaKind::Par, a, b));
        return s;
      }
      case Rule::Ex: {
        Sequent s = check(*p.premises[0]);
        if (p.a >= s.size() || p.b >= s.size()) fail(id, p.rule, "position out of range");
        std::swap(s[p.a], s[p.b]);
        return s;
      }
      case Rule::Tensor:
      case Rule::Cut:
      case Rule::Mix: {
        Sequent s1 = check(*p.premises[0]);
        Sequent s2 = check(*p.premises[1]);
        if (p.rule == Rule::Mix) {
          if (!disjoint(location(s1, 0, s1.size()), location(s2, 0, s2.size()))) {
            fail(id, p.rule, "premises have overlapping locations");
          }
          s1.insert(s1.end(), s2.begin(), s2.end());
          return s1;
        }
        if (s1.empty() || s2.empty()) fail(id, p.rule, "premises need a formula");
        const FormulaPtr a = s1.back();
        const FormulaPtr b = s2.back();
        if (p.rule == Rule::Tensor) {
          if (!disjoint(location(s1, 0, s1.size()), location(s2, 0, s2.size()))) {
            fail(id, p.rule, "premises have overlapping locations");
          }
          s1.pop_back();
          s2.pop_back();
          s1.insert(s1.end(), s2.begin(), s2.end());
          s1.push_back(make_binary(FormulaKind::Tensor, a, b));
          return s1;
        }
        if (!formula_equal(*dual(a), *b)) {
          fail(id, p.rule, to_string(*a) + " and " + to_string(*b) + " are not dual");
        }
        if (!disjoint(location(s1, 0, s1.size() - 1), location(s2, 0, s2.size() - 1))) {
          fail(id, p.rule, "contexts have overlapping locations");
        }
        s1.pop_back();
        s2.pop_back();
        s1.insert(s1.end(), s2.begin(), s2.end());
        return s1;
      }
    }
    fail(id, p.rule, "unknown rule");
  }
};

}  // namespace detail

// Conclusion of the proof; throws ProofError naming the node (preorder index)
// whose side condition fails.
inline Sequent check_proof(const ProofNode& p, const Basis& basis) {
  detail::Checker c{basis, {}, 0};
  Sequent s = c.check(p);
  try {
    sequent_location(s, basis);
  } catch (const ProofError& e) {
    throw ProofError(std::string("conclusion: ") + e.what());
  }
  return s;
}

// Fax from (i, j n + x) to (i, j' n + x).
inline Project axiom_project(const Basis& basis, const std::string& name, std::uint64_t j,
                             std::uint64_t j2) {
  const auto from = atom_vertices(basis, name, j);
  const auto to = atom_vertices(basis, name, j2);
  std::map<Vertex, Vertex> m;
  for (std::size_t x = 0; x < from.size(); ++x) m[from[x]] = to[x];
  return fax(Delocation(std::move(m)));
}

inline Project interpret(const ProofNode& p, const Basis& basis) {
  switch (p.rule) {
    case Rule::Ax:
      if (!p.localized) throw ProofError("cannot interpret an axiom without locations");
      return axiom_project(basis, p.name, p.j, p.j2);
    case Rule::One: return unit_project();
    case Rule::Bot:
    case Rule::Par:
    case Rule::Ex: return interpret(*p.premises[0], basis);
    case Rule::Tensor:
    case Rule::Mix: return tensor(interpret(*p.premises[0], basis), interpret(*p.premises[1], basis));
    case Rule::Cut: return cut(interpret(*p.premises[0], basis), interpret(*p.premises[1], basis));
  }
  throw ProofError("unknown rule");
}

// Fills the axioms in preorder with locations: two entries per axiom, the
// positive occurrence first.
inline ProofPtr localize(const ProofNode& p, const std::vector<std::uint64_t>& enumeration) {
  std::map<std::pair<std::string, bool>, std::set<std::uint64_t>> seen;
  std::size_t next = 0;
  std::function<ProofPtr(const ProofNode&)> go = [&](const ProofNode& n) -> ProofPtr {
    auto copy = std::make_shared<ProofNode>(n);
    if (n.rule == Rule::Ax) {
      if (next + 2 > enumeration.size()) throw InvalidArgument("enumeration is too short");
      copy->localized = true;
      copy->j = enumeration[next++];
      copy->j2 = enumeration[next++];
      if (!seen[{n.name, false}].insert(copy->j).second ||
          !seen[{n.name, true}].insert(copy->j2).second) {
        throw InvalidArgument("enumeration is not injective for " + n.name);
      }
    }
    copy->premises.clear();
    for (const auto& q : n.premises) copy->premises.push_back(go(*q));
    return copy;
  };
  ProofPtr out = go(p);
  if (next != enumeration.size()) throw InvalidArgument("enumeration is too long");
  return out;
}

// Erases locations: every axiom becomes `(ax X)`.
inline ProofPtr erase_locations(const ProofNode& p) {
  auto copy = std::make_shared<ProofNode>(p);
  if (p.rule == Rule::Ax) {
    copy->localized = false;
    copy->j = copy->j2 = 0;
  }
  copy->premises.clear();
  for (const auto& q : p.premises) copy->premises.push_back(erase_locations(*q));
  return copy;
}

// The axiom locations in preorder, in the layout localize() consumes.
inline std::vector<std::uint64_t> enumeration_of(const ProofNode& p) {
  std::vector<std::uint64_t> out;
  std::function<void(const ProofNode&)> go = [&](const ProofNode& n) {
    if (n.rule == Rule::Ax) {
      out.push_back(n.j);
      out.push_back(n.j2);
    }
    for (const auto& q : n.premises) go(*q);
  };
  go(p);
  return out;
}

}  // namespace goi::logic
