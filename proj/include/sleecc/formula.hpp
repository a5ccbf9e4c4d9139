#ifndef SLEECC_FORMULA_HPP
#define SLEECC_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sleecc/atom.hpp"
#include "sleecc/errors.hpp"

namespace sleecc {

// Propositional formula over the core grammar  phi ::= p | not phi | phi or phi.
//
// Conjunction, implication and the constants are not separate constructors;
// they are built from the core ones:
//   a and b  = not (not a or not b)
//   a -> b   = not a or b
//   true     = q or not q      (q = Atom::reserved_true())
//   false    = not true
// Formulas are immutable and share subtrees, so copies are cheap and safe to
// hand to other threads.
class Formula {
public:
  enum class Kind : std::uint8_t { Var, Not, Or };

  static Formula variable(Atom atom);
  friend Formula negate(Formula f);
  friend Formula disjoin(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  const Atom& atom() const noexcept;
  const Formula& operand() const noexcept;
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_not() const noexcept { return kind() == Kind::Not; }
  bool is_or() const noexcept { return kind() == Kind::Or; }

  // Node identity; equal for copies of the same formula object.
  const void* id() const noexcept { return node_.get(); }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Kind::Var: return a.atom() == b.atom();
    case Kind::Not: return a.operand() == b.operand();
    case Kind::Or: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;
  Formula lhs;
  Formula rhs;
};

inline Formula Formula::variable(Atom atom) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(atom), {}, {}}));
}
inline Formula::Kind Formula::kind() const noexcept { return node_->kind; }
inline const Atom& Formula::atom() const noexcept { return *node_->atom; }
inline const Formula& Formula::operand() const noexcept { return node_->lhs; }
inline const Formula& Formula::left() const noexcept { return node_->lhs; }
inline const Formula& Formula::right() const noexcept { return node_->rhs; }

inline Formula negate(Formula f) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::Not, std::nullopt, std::move(f), {}}));
}

inline Formula disjoin(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::Or, std::nullopt, std::move(lhs), std::move(rhs)}));
}

inline Formula variable(Atom atom) { return Formula::variable(std::move(atom)); }

inline Formula conjoin(Formula lhs, Formula rhs) {
  return negate(disjoin(negate(std::move(lhs)), negate(std::move(rhs))));
}

inline Formula implies(Formula lhs, Formula rhs) {
  return disjoin(negate(std::move(lhs)), std::move(rhs));
}

inline Formula truth() {
  const auto& q = Atom::reserved_true();
  return disjoin(variable(q), negate(variable(q)));
}

inline Formula falsity() { return negate(truth()); }

// Right-associated conjunction f0 and (f1 and (...)). Empty input yields true.
inline Formula conjoin_all(std::span<const Formula> parts) {
  if (parts.empty()) return truth();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = conjoin(parts[i], acc);
  return acc;
}

inline bool is_truth(const Formula& f) noexcept {
  return f.is_or() && f.left().is_var() && f.left().atom().is_reserved() && f.right().is_not() &&
         f.right().operand().is_var() && f.right().operand().atom().is_reserved();
}

inline bool is_falsity(const Formula& f) noexcept { return f.is_not() && is_truth(f.operand()); }

// not (not a or not b)
inline bool is_conjunction(const Formula& f) noexcept {
  return f.is_not() && f.operand().is_or() && f.operand().left().is_not() &&
         f.operand().right().is_not();
}

// phi UNLESS psi  =  not psi -> phi
inline Formula unless(Formula phi, Formula psi) {
  return implies(negate(std::move(psi)), std::move(phi));
}

// phi UNLESS psi IN WHICH CASE chi  =  (phi UNLESS psi) and (psi -> chi)
inline Formula unless_iwc(Formula phi, Formula psi, Formula chi) {
  return conjoin(unless(std::move(phi), psi), implies(psi, std::move(chi)));
}

// Number of core constructor nodes.
inline std::size_t size(const Formula& f) {
  switch (f.kind()) {
  case Formula::Kind::Var: return 1;
  case Formula::Kind::Not: return 1 + size(f.operand());
  case Formula::Kind::Or: return 1 + size(f.left()) + size(f.right());
  }
  return 0;
}

namespace detail {
inline void collect_atoms(const Formula& f, std::set<Atom>& seen, std::vector<Atom>& out) {
  if (is_truth(f)) return;
  switch (f.kind()) {
  case Formula::Kind::Var:
    if (seen.insert(f.atom()).second) out.push_back(f.atom());
    return;
  case Formula::Kind::Not: collect_atoms(f.operand(), seen, out); return;
  case Formula::Kind::Or:
    collect_atoms(f.left(), seen, out);
    collect_atoms(f.right(), seen, out);
    return;
  }
}
} // namespace detail

// Atoms in order of first occurrence (left to right). The reserved atom inside
// true/false is not reported.
inline std::vector<Atom> atoms(const Formula& f) {
  std::set<Atom> seen;
  std::vector<Atom> out;
  detail::collect_atoms(f, seen, out);
  return out;
}

// Total truth assignment over a finite set of atoms.
class Interpretation {
public:
  Interpretation() = default;
  Interpretation(std::initializer_list<std::pair<const Atom, bool>> init) : values_(init) {}

  void set(const Atom& a, bool value) { values_[a] = value; }
  bool contains(const Atom& a) const { return values_.count(a) != 0; }
  bool value(const Atom& a) const {
    auto it = values_.find(a);
    if (it == values_.end()) throw UnknownAtom(a.to_string());
    return it->second;
  }
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<Atom, bool>& values() const noexcept { return values_; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
  std::map<Atom, bool> values_;
};

inline bool eval(const Formula& f, const Interpretation& v) {
  switch (f.kind()) {
  case Formula::Kind::Var: return v.value(f.atom());
  case Formula::Kind::Not: return !eval(f.operand(), v);
  case Formula::Kind::Or:
    if (is_truth(f)) return true;
    return eval(f.left(), v) || eval(f.right(), v);
  }
  return false;
}

// Flattened formula evaluated against a bit vector: bit i of the assignment is
// the value of atoms[i]. Used for exhaustive enumeration.
class BitEvaluator {
public:
  BitEvaluator(const Formula& f, std::span<const Atom> order) {
    std::map<Atom, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<int>(i));
    root_ = flatten(f, index);
  }

  bool operator()(std::uint64_t assignment) const { return run(root_, assignment); }

private:
  enum class Op : std::uint8_t { Const, Var, Not, Or };
  struct Step {
    Op op;
    int a;
    int b;
  };

  int flatten(const Formula& f, const std::map<Atom, int>& index) {
    Step s{};
    if (is_truth(f)) {
      s = {Op::Const, 1, 0};
    } else {
      switch (f.kind()) {
      case Formula::Kind::Var: {
        auto it = index.find(f.atom());
        if (it == index.end()) throw UnknownAtom(f.atom().to_string());
        s = {Op::Var, it->second, 0};
        break;
      }
      case Formula::Kind::Not: s = {Op::Not, flatten(f.operand(), index), 0}; break;
      case Formula::Kind::Or: {
        int l = flatten(f.left(), index);
        s = {Op::Or, l, flatten(f.right(), index)};
        break;
      }
      }
    }
    steps_.push_back(s);
    return static_cast<int>(steps_.size() - 1);
  }

  bool run(int i, std::uint64_t assignment) const {
    const Step& s = steps_[static_cast<std::size_t>(i)];
    switch (s.op) {
    case Op::Const: return s.a != 0;
    case Op::Var: return (assignment >> s.a) & 1U;
    case Op::Not: return !run(s.a, assignment);
    case Op::Or: return run(s.a, assignment) || run(s.b, assignment);
    }
    return false;
  }

  std::vector<Step> steps_;
  int root_ = 0;
};

inline constexpr std::size_t kBruteforceAtomLimit = 20;

// Logical equivalence by enumerating every interpretation over the union of
// both formulas' atoms.
inline bool equiv_bruteforce(const Formula& f, const Formula& g) {
  std::vector<Atom> order = atoms(f);
  for (auto& a : atoms(g))
    if (std::find(order.begin(), order.end(), a) == order.end()) order.push_back(a);
  if (order.size() > kBruteforceAtomLimit) throw TooManyAtoms(order.size(), kBruteforceAtomLimit);
  BitEvaluator ef(f, order), eg(g, order);
  const std::uint64_t count = std::uint64_t{1} << order.size();
  for (std::uint64_t bits = 0; bits < count; ++bits)
    if (ef(bits) != eg(bits)) return false;
  return true;
}

// Optional cleanup pass: drops every "not not". Never applied implicitly.
inline Formula remove_double_negations(const Formula& f) {
  switch (f.kind()) {
  case Formula::Kind::Var: return f;
  case Formula::Kind::Not:
    if (f.operand().is_not()) return remove_double_negations(f.operand().operand());
    return negate(remove_double_negations(f.operand()));
  case Formula::Kind::Or:
    if (is_truth(f)) return f;
    return disjoin(remove_double_negations(f.left()), remove_double_negations(f.right()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Canonical text form.
//
// The printer reads the core tree back through the derived connectives:
// not(not a or not b) prints as "a and b", (not a or b) as "a -> b", and the
// tautology pattern as "true". Binary connectives associate to the right and
// bind as not > and > or > ->. The consequent of "->" is parenthesized
// whenever it is itself binary.

namespace detail {

enum class View { Atom, True, False, Not, And, Or, Implies };

struct Viewed {
  View view;
  const Formula* a = nullptr;
  const Formula* b = nullptr;
};

inline Viewed view_of(const Formula& f) {
  switch (f.kind()) {
  case Formula::Kind::Var: return {View::Atom, &f};
  case Formula::Kind::Not:
    if (is_truth(f.operand())) return {View::False};
    if (is_conjunction(f))
      return {View::And, &f.operand().left().operand(), &f.operand().right().operand()};
    return {View::Not, &f.operand()};
  case Formula::Kind::Or:
    if (is_truth(f)) return {View::True};
    if (f.left().is_not() && !is_conjunction(f.left()) && !is_falsity(f.left()))
      return {View::Implies, &f.left().operand(), &f.right()};
    return {View::Or, &f.left(), &f.right()};
  }
  return {View::Atom, &f};
}

inline int precedence(View v) {
  switch (v) {
  case View::Implies: return 1;
  case View::Or: return 2;
  case View::And: return 3;
  case View::Not: return 4;
  default: return 5;
  }
}

inline void print(const Formula& f, std::string& out);

inline void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

inline void print(const Formula& f, std::string& out) {
  Viewed v = view_of(f);
  auto prec = [](const Formula* g) { return precedence(view_of(*g).view); };
  switch (v.view) {
  case View::Atom: out += v.a->atom().to_string(); return;
  case View::True: out += "true"; return;
  case View::False: out += "false"; return;
  case View::Not:
    out += "not ";
    print_wrapped(*v.a, prec(v.a) < 4, out);
    return;
  case View::And:
    print_wrapped(*v.a, prec(v.a) <= 3, out);
    out += " and ";
    print_wrapped(*v.b, prec(v.b) < 3, out);
    return;
  case View::Or:
    print_wrapped(*v.a, prec(v.a) <= 2, out);
    out += " or ";
    print_wrapped(*v.b, prec(v.b) < 2, out);
    return;
  case View::Implies:
    print_wrapped(*v.a, prec(v.a) <= 1, out);
    out += " -> ";
    print_wrapped(*v.b, prec(v.b) <= 3, out);
    return;
  }
}

} // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, out);
  return out;
}

} // namespace sleecc

#endif // SLEECC_FORMULA_HPP
