#ifndef SLEECC_HORN_HPP
#define SLEECC_HORN_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sleecc/errors.hpp"
#include "sleecc/formula.hpp"
#include "sleecc/ruleset.hpp"

namespace sleecc {

// Tractable fragment: every condition is a single negated sensed atom and
// every outcome a single positive obligation atom. Facts may be any literals.
//
// Compiled conjuncts then read  p0 or ... or pi or not p(i+1) or oi  (and
// p0 or ... or pn or on for the last one): dual-Horn clauses. Flipping every
// variable turns them into Horn clauses, whose satisfiability is decided by
// counter-based forward chaining in time linear in the number of literals.

namespace detail {

inline std::optional<Atom> negated_atom(const Formula& f) {
  if (f.is_not() && f.operand().is_var() && !f.operand().atom().is_reserved())
    return f.operand().atom();
  return std::nullopt;
}

inline std::optional<Atom> positive_atom(const Formula& f) {
  if (f.is_var() && !f.atom().is_reserved()) return f.atom();
  return std::nullopt;
}

// Empty string when eligible, otherwise the reason.
inline std::string horn_ineligibility(const RuleSet& rs) {
  const std::set<Atom> sensed(rs.sensed.begin(), rs.sensed.end());
  const std::set<Atom> obligations(rs.obligations.begin(), rs.obligations.end());
  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    const auto& rule = rs.rules[r];
    std::string label = rule.name() ? *rule.name() : "#" + std::to_string(r + 1);
    for (std::size_t i = 0; i < rule.conditions().size(); ++i) {
      auto c = negated_atom(rule.conditions()[i]);
      if (!c || !sensed.count(*c))
        return "rule " + label + ": condition " + std::to_string(i) +
               " is not a negated sensed atom";
      auto o = positive_atom(rule.outcomes()[i]);
      if (!o || !obligations.count(*o))
        return "rule " + label + ": outcome " + std::to_string(i) +
               " is not a single obligation atom";
    }
  }
  return {};
}

} // namespace detail

inline bool horn_eligible(const RuleSet& rs) { return detail::horn_ineligibility(rs).empty(); }

// Where a clause came from.
struct ClauseOrigin {
  enum class Kind { Rule, Fact, Query } kind;
  std::size_t rule = 0;     // index into RuleSet::rules (Kind::Rule)
  std::size_t conjunct = 0; // compiled conjunct within the rule (Kind::Rule)
  std::size_t fact = 0;     // index into RuleSet::facts (Kind::Fact)
};

// A clause with at most one negative literal, over 1-based variable indices.
struct DualHornClause {
  std::vector<int> literals;
  ClauseOrigin origin;
};

// A clause with at most one positive literal, stored as body -> head:
// (not b1 or ... or not bk or h). No head means the clause is purely negative.
struct HornClause {
  std::vector<int> body;
  std::optional<int> head;
};

class HornInstance {
public:
  HornInstance(std::vector<HornClause> clauses, std::vector<ClauseOrigin> origin, int num_vars)
      : clauses_(std::move(clauses)), origin_(std::move(origin)), num_vars_(num_vars) {
    if (origin_.size() != clauses_.size()) throw std::logic_error("one origin per clause");
  }

  // Flips every variable of a dual-Horn clause set.
  static HornInstance from_dual(const std::vector<DualHornClause>& dual, int num_vars) {
    std::vector<HornClause> clauses;
    std::vector<ClauseOrigin> origin;
    clauses.reserve(dual.size());
    origin.reserve(dual.size());
    for (const auto& d : dual) {
      HornClause h;
      for (int lit : d.literals) {
        // after flipping, a negative literal becomes positive and vice versa
        if (lit < 0) {
          if (h.head) throw std::logic_error("clause has more than one negative literal");
          h.head = -lit;
        } else {
          h.body.push_back(lit);
        }
      }
      clauses.push_back(std::move(h));
      origin.push_back(d.origin);
    }
    return HornInstance(std::move(clauses), std::move(origin), num_vars);
  }

  const std::vector<HornClause>& clauses() const noexcept { return clauses_; }
  const std::vector<ClauseOrigin>& origin() const noexcept { return origin_; }
  int num_vars() const noexcept { return num_vars_; }

  struct Outcome {
    bool satisfiable;
    std::vector<bool> minimal_model; // indexed by variable; empty when unsatisfiable
    std::uint64_t steps;             // variable settings plus counter decrements
  };

  // Dowling-Gallier forward chaining.
  Outcome propagate() const {
    const auto n = static_cast<std::size_t>(num_vars_) + 1;
    std::vector<std::size_t> remaining(clauses_.size());
    std::vector<std::vector<std::size_t>> watchers(n);
    std::vector<bool> value(n, false);
    std::deque<int> queue;
    std::uint64_t steps = 0;

    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      remaining[c] = clauses_[c].body.size();
      for (int b : clauses_[c].body) watchers[static_cast<std::size_t>(b)].push_back(c);
      if (remaining[c] == 0) {
        if (!clauses_[c].head) return {false, {}, steps};
        queue.push_back(*clauses_[c].head);
      }
    }
    while (!queue.empty()) {
      auto v = static_cast<std::size_t>(queue.front());
      queue.pop_front();
      if (value[v]) continue;
      value[v] = true;
      ++steps;
      for (std::size_t c : watchers[v]) {
        ++steps;
        if (--remaining[c] != 0) continue;
        if (!clauses_[c].head) return {false, {}, steps};
        queue.push_back(*clauses_[c].head);
      }
    }
    return {true, std::move(value), steps};
  }

private:
  std::vector<HornClause> clauses_;
  std::vector<ClauseOrigin> origin_;
  int num_vars_;
};

// Variable numbering shared by the dual-Horn and Horn forms.
struct HornEncoding {
  std::vector<Atom> atoms; // atoms[i] has index i + 1
  std::vector<DualHornClause> dual;
  HornInstance instance;
};

// Builds the clause sets for "does rs entail o?" (query = o), or for plain
// consistency (query = nullopt). Throws NotEligible outside the fragment.
inline HornEncoding build_horn(const RuleSet& rs, const std::optional<Atom>& query) {
  if (auto reason = detail::horn_ineligibility(rs); !reason.empty()) throw NotEligible(reason);
  if (query && !rs.is_obligation(*query))
    throw NotEligible("query '" + query->to_string() + "' is not a declared obligation atom");

  std::vector<Atom> atoms = rs.declared();
  std::map<Atom, int> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], static_cast<int>(i + 1));
  auto idx = [&](const Atom& a) { return index.at(a); };

  std::vector<DualHornClause> dual;
  auto add = [&](std::vector<int> lits, ClauseOrigin origin) {
    std::vector<int> clause;
    for (int l : lits) {
      if (std::find(clause.begin(), clause.end(), -l) != clause.end()) return; // tautology
      if (std::find(clause.begin(), clause.end(), l) == clause.end()) clause.push_back(l);
    }
    int negatives = 0;
    for (int l : clause) negatives += l < 0 ? 1 : 0;
    if (negatives > 1) throw std::logic_error("produced a clause that is not dual-Horn");
    dual.push_back({std::move(clause), origin});
  };

  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    const auto& rule = rs.rules[r];
    const std::size_t n = rule.conditions().size() - 1;
    std::vector<int> cond, out;
    for (std::size_t i = 0; i <= n; ++i) {
      cond.push_back(idx(*detail::negated_atom(rule.conditions()[i])));
      out.push_back(idx(*detail::positive_atom(rule.outcomes()[i])));
    }
    // Ci = not pi, so "not C0 or ... or not Ci" is p0 or ... or pi.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> lits(cond.begin(), cond.begin() + static_cast<std::ptrdiff_t>(i + 1));
      lits.push_back(-cond[i + 1]);
      lits.push_back(out[i]);
      add(std::move(lits), {ClauseOrigin::Kind::Rule, r, i, 0});
    }
    std::vector<int> last = cond;
    last.push_back(out[n]);
    add(std::move(last), {ClauseOrigin::Kind::Rule, r, n, 0});
  }
  for (std::size_t f = 0; f < rs.facts.size(); ++f) {
    int v = idx(rs.facts[f].atom);
    add({rs.facts[f].positive ? v : -v}, {ClauseOrigin::Kind::Fact, 0, 0, f});
  }
  if (query) add({-idx(*query)}, {ClauseOrigin::Kind::Query, 0, 0, 0});

  auto instance = HornInstance::from_dual(dual, static_cast<int>(atoms.size()));
  return {std::move(atoms), std::move(dual), std::move(instance)};
}

struct HornResult {
  bool entailed;
  // When not entailed: a model of the rules and facts with the query false.
  std::optional<Interpretation> witness;
  std::uint64_t steps;
  std::size_t clauses = 0;
};

namespace detail {
inline Interpretation unflip(const std::vector<Atom>& atoms, const std::vector<bool>& model) {
  Interpretation v;
  for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], !model[i + 1]);
  return v;
}
} // namespace detail

inline HornResult horn_entails(const RuleSet& rs, const Atom& obligation) {
  HornEncoding enc = build_horn(rs, obligation);
  auto outcome = enc.instance.propagate();
  const std::size_t clauses = enc.instance.clauses().size();
  if (!outcome.satisfiable) return {true, std::nullopt, outcome.steps, clauses};
  return {false, detail::unflip(enc.atoms, outcome.minimal_model), outcome.steps, clauses};
}

struct HornConsistency {
  bool consistent;
  std::optional<Interpretation> model;
  std::uint64_t steps;
  std::size_t clauses = 0;
};

inline HornConsistency horn_consistent(const RuleSet& rs) {
  HornEncoding enc = build_horn(rs, std::nullopt);
  auto outcome = enc.instance.propagate();
  const std::size_t clauses = enc.instance.clauses().size();
  if (!outcome.satisfiable) return {false, std::nullopt, outcome.steps, clauses};
  return {true, detail::unflip(enc.atoms, outcome.minimal_model), outcome.steps, clauses};
}

} // namespace sleecc

#endif // SLEECC_HORN_HPP
