#ifndef SLEECC_CNF_HPP
#define SLEECC_CNF_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sleecc/formula.hpp"

namespace sleecc {

// Clauses over signed variable indices (DIMACS convention). atoms[i] owns
// index i + 1; indices above atoms.size() are Tseitin auxiliaries.
class ClauseSet {
public:
  using Clause = std::vector<int>;

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  int num_vars() const noexcept { return num_vars_; }
  int num_atoms() const noexcept { return static_cast<int>(atoms_.size()); }
  bool is_auxiliary(int var) const noexcept { return var > num_atoms(); }

  std::optional<int> index_of(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Registers an atom (idempotent) and returns its index. Atoms must be
  // registered before any auxiliary variable is allocated.
  int add_atom(const Atom& a) {
    if (auto i = index_of(a)) return *i;
    if (num_vars_ != num_atoms())
      throw std::logic_error("atoms must be registered before auxiliary variables");
    atoms_.push_back(a);
    num_vars_ = num_atoms();
    index_.emplace(a, num_vars_);
    return num_vars_;
  }

  int add_auxiliary() { return ++num_vars_; }

  // Adds a clause after removing repeated literals. Clauses containing both
  // polarities of a variable are tautologies and are dropped.
  void add_clause(Clause lits) {
    for (int l : lits)
      if (l == 0 || std::abs(l) > num_vars_) throw std::out_of_range("literal out of range");
    std::vector<int> out;
    out.reserve(lits.size());
    for (int l : lits) {
      if (std::find(out.begin(), out.end(), -l) != out.end()) return;
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    clauses_.push_back(std::move(out));
  }

  // Restricts a solver model (model[v] for v in 1..num_vars) to the atoms.
  Interpretation project(const std::vector<bool>& model) const {
    Interpretation v;
    for (int i = 0; i < num_atoms(); ++i) v.set(atoms_[static_cast<std::size_t>(i)], model[static_cast<std::size_t>(i + 1)]);
    return v;
  }

private:
  std::vector<Clause> clauses_;
  std::vector<Atom> atoms_;
  std::map<Atom, int> index_;
  int num_vars_ = 0;
};

namespace detail {

class CnfBuilder {
public:
  explicit CnfBuilder(ClauseSet& out) : out_(out) {}

  // Adds clauses forcing f to hold.
  void assert_formula(const Formula& f) {
    if (is_truth(f)) return;
    if (is_conjunction(f)) {
      assert_formula(f.operand().left().operand());
      assert_formula(f.operand().right().operand());
      return;
    }
    if (f.is_not() && f.operand().is_not()) {
      assert_formula(f.operand().operand());
      return;
    }
    std::vector<int> lits;
    switch (collect_clause(f, lits)) {
    case Shape::Tautology: return;
    case Shape::Clause: out_.add_clause(std::move(lits)); return;
    case Shape::Other: break;
    }
    Encoded e = encode(f);
    if (e.constant) {
      if (!e.value) out_.add_clause({});
      return;
    }
    out_.add_clause({e.lit});
  }

private:
  enum class Shape { Clause, Tautology, Other };

  Shape collect_clause(const Formula& f, std::vector<int>& lits) {
    if (is_truth(f)) return Shape::Tautology;
    if (is_falsity(f)) return Shape::Clause;
    switch (f.kind()) {
    case Formula::Kind::Var: lits.push_back(*out_.index_of(f.atom())); return Shape::Clause;
    case Formula::Kind::Not:
      if (f.operand().is_var()) {
        lits.push_back(-*out_.index_of(f.operand().atom()));
        return Shape::Clause;
      }
      if (f.operand().is_not()) return collect_clause(f.operand().operand(), lits);
      return Shape::Other;
    case Formula::Kind::Or: {
      Shape l = collect_clause(f.left(), lits);
      if (l != Shape::Clause) return l;
      return collect_clause(f.right(), lits);
    }
    }
    return Shape::Other;
  }

  struct Encoded {
    bool constant;
    bool value;
    int lit;
  };

  // Literal equivalent to f, introducing x <-> (a or b) for each disjunction.
  Encoded encode(const Formula& f) {
    if (is_truth(f)) return {true, true, 0};
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Encoded e{};
    switch (f.kind()) {
    case Formula::Kind::Var: e = {false, false, *out_.index_of(f.atom())}; break;
    case Formula::Kind::Not: {
      Encoded inner = encode(f.operand());
      e = inner.constant ? Encoded{true, !inner.value, 0} : Encoded{false, false, -inner.lit};
      break;
    }
    case Formula::Kind::Or: {
      Encoded a = encode(f.left());
      Encoded b = encode(f.right());
      if ((a.constant && a.value) || (b.constant && b.value)) {
        e = {true, true, 0};
      } else if (a.constant) {
        e = b;
      } else if (b.constant) {
        e = a;
      } else if (a.lit == b.lit) {
        e = a;
      } else if (a.lit == -b.lit) {
        e = {true, true, 0};
      } else {
        int x = out_.add_auxiliary();
        out_.add_clause({-x, a.lit, b.lit});
        out_.add_clause({x, -a.lit});
        out_.add_clause({x, -b.lit});
        e = {false, false, x};
      }
      break;
    }
    }
    memo_.emplace(f.id(), e);
    return e;
  }

  ClauseSet& out_;
  std::unordered_map<const void*, Encoded> memo_;
};

} // namespace detail

// Equisatisfiable CNF of f. Conjunctions at the top level are split and
// subformulas that are already clauses are copied verbatim; the rest goes
// through a Tseitin encoding. `domain` atoms are registered first (in order),
// then the atoms of f by first occurrence, so models restricted to the atoms
// are exactly the models of f over that domain.
inline ClauseSet to_cnf(const Formula& f, std::span<const Atom> domain = {}) {
  ClauseSet cs;
  for (const auto& a : domain) cs.add_atom(a);
  for (const auto& a : atoms(f)) cs.add_atom(a);
  detail::CnfBuilder(cs).assert_formula(f);
  return cs;
}

} // namespace sleecc

#endif // SLEECC_CNF_HPP
