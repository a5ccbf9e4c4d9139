#ifndef SLEECC_COMPILER_HPP
#define SLEECC_COMPILER_HPP

#include <vector>

#include "sleecc/formula.hpp"
#include "sleecc/ruleset.hpp"

namespace sleecc {

// Lowers IF C0 THEN O0, UNLESS C1 IN WHICH CASE O1, ..., UNLESS Cn IN WHICH CASE On
// to the conjunction
//
//   for i < n:  (C0 and ... and Ci and not C(i+1)) -> Oi
//   finally:    (C0 and ... and Cn) -> On
//
// Conjunctions associate to the right, conjuncts appear in clause order, and
// "not C" is always a fresh negation node (so C = not d gives not not d).
inline Formula compile_rule(const SleecRule& rule) {
  const auto& c = rule.conditions();
  const auto& o = rule.outcomes();
  const std::size_t n = c.size() - 1;
  std::vector<Formula> conjuncts;
  conjuncts.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Formula> antecedent(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i + 1));
    antecedent.push_back(negate(c[i + 1]));
    conjuncts.push_back(implies(conjoin_all(antecedent), o[i]));
  }
  conjuncts.push_back(implies(conjoin_all(c), o[n]));
  return conjoin_all(conjuncts);
}

// Rules in order, then facts. An empty rule set without facts is true.
inline Formula compile_ruleset(const RuleSet& rs) {
  std::vector<Formula> parts;
  parts.reserve(rs.rules.size() + rs.facts.size());
  for (const auto& r : rs.rules) parts.push_back(compile_rule(r));
  for (const auto& f : rs.facts) parts.push_back(f.to_formula());
  return conjoin_all(parts);
}

// Truth of a rule under v, decided clause by clause without building the
// compiled formula:
//   for every i < n: some Cj (j <= i) is false, or C(i+1) is true, or Oi is true
//   and: some Ci (i <= n) is false, or On is true.
inline bool semantics_eval(const SleecRule& rule, const Interpretation& v) {
  const auto& c = rule.conditions();
  const auto& o = rule.outcomes();
  const std::size_t n = c.size() - 1;

  std::vector<bool> cond(c.size()), out(o.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    cond[i] = eval(c[i], v);
    out[i] = eval(o[i], v);
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool some_false = false;
    for (std::size_t j = 0; j <= i && !some_false; ++j) some_false = !cond[j];
    if (!(some_false || cond[i + 1] || out[i])) return false;
  }
  bool some_false = false;
  for (std::size_t i = 0; i <= n && !some_false; ++i) some_false = !cond[i];
  return some_false || out[n];
}

inline std::size_t compiled_size(const SleecRule& rule) { return size(compile_rule(rule)); }

} // namespace sleecc

#endif // SLEECC_COMPILER_HPP
