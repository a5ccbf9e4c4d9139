#ifndef SLEECC_QUERY_HPP
#define SLEECC_QUERY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sleecc/cnf.hpp"
#include "sleecc/compiler.hpp"
#include "sleecc/errors.hpp"
#include "sleecc/horn.hpp"
#include "sleecc/ruleset.hpp"
#include "sleecc/solver.hpp"

namespace sleecc {

enum class Verdict { Entailed, NotEntailed, Consistent, Inconsistent };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::Entailed: return "ENTAILED";
  case Verdict::NotEntailed: return "NOT_ENTAILED";
  case Verdict::Consistent: return "CONSISTENT";
  case Verdict::Inconsistent: return "INCONSISTENT";
  }
  return "?";
}

enum class Engine { Auto, Sat, Horn };

inline const char* to_string(Engine e) {
  switch (e) {
  case Engine::Auto: return "auto";
  case Engine::Sat: return "sat";
  case Engine::Horn: return "horn";
  }
  return "?";
}

struct QueryStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t horn_steps = 0;
  std::size_t clauses = 0;
  std::size_t variables = 0;
};

struct QueryResult {
  Verdict verdict;
  // NotEntailed: a countermodel. Consistent: a model. Over declared atoms only.
  std::optional<Interpretation> witness;
  Engine engine = Engine::Sat; // the engine that actually ran
  QueryStats stats;
};

namespace detail {

inline Interpretation restrict_to(const Interpretation& v, const std::vector<Atom>& domain) {
  Interpretation out;
  for (const auto& a : domain) out.set(a, v.value(a));
  return out;
}

struct SatOutcome {
  std::optional<Interpretation> model;
  QueryStats stats;
};

inline SatOutcome sat_check(const Formula& f, const std::vector<Atom>& domain) {
  ClauseSet cs = to_cnf(f, domain);
  SolveResult r = solve(cs);
  SatOutcome out;
  out.stats.decisions = r.stats.decisions;
  out.stats.propagations = r.stats.propagations;
  out.stats.conflicts = r.stats.conflicts;
  out.stats.clauses = cs.clauses().size();
  out.stats.variables = static_cast<std::size_t>(cs.num_vars());
  if (r.satisfiable) out.model = restrict_to(cs.project(r.model), domain);
  return out;
}

inline bool horn_query_shape(const RuleSet& rs, const Formula& query) {
  return query.is_var() && rs.is_obligation(query.atom());
}

inline Engine pick(Engine requested, bool horn_possible) {
  if (requested == Engine::Auto) return horn_possible ? Engine::Horn : Engine::Sat;
  return requested;
}

// Results are re-checked against the compiled rule set before they leave the
// query layer.
inline void check_witness(const Formula& premises, const QueryResult& r,
                          const std::optional<Formula>& query) {
  if (!r.witness) throw std::logic_error("missing witness");
  if (!eval(premises, *r.witness)) throw std::logic_error("witness violates the rule set");
  if (query && eval(*query, *r.witness)) throw std::logic_error("countermodel satisfies the query");
}

} // namespace detail

// rs |= query, decided by refutation: compile(rs) and not query unsatisfiable.
// Auto uses the Horn engine when the rule set is eligible and the query is a
// single obligation atom.
inline QueryResult entails(const RuleSet& rs, const Formula& query, Engine engine = Engine::Auto) {
  for (const auto& a : atoms(query))
    if (!rs.is_declared(a)) throw UndeclaredAtom(a.to_string());
  const std::vector<Atom> domain = rs.declared();
  const Formula premises = compile_ruleset(rs);

  const bool horn_ok = horn_eligible(rs) && detail::horn_query_shape(rs, query);
  QueryResult r{Verdict::Entailed, std::nullopt, detail::pick(engine, horn_ok), {}};
  if (r.engine == Engine::Horn) {
    if (!horn_eligible(rs)) throw NotEligible(detail::horn_ineligibility(rs));
    if (!detail::horn_query_shape(rs, query))
      throw NotEligible("query must be a single declared obligation atom");
    HornResult h = horn_entails(rs, query.atom());
    r.stats.horn_steps = h.steps;
    r.stats.clauses = h.clauses;
    r.stats.variables = domain.size();
    if (!h.entailed) {
      r.verdict = Verdict::NotEntailed;
      r.witness = detail::restrict_to(*h.witness, domain);
    }
  } else {
    auto sat = detail::sat_check(conjoin(premises, negate(query)), domain);
    r.stats = sat.stats;
    if (sat.model) {
      r.verdict = Verdict::NotEntailed;
      r.witness = std::move(sat.model);
    }
  }
  if (r.verdict == Verdict::NotEntailed) detail::check_witness(premises, r, query);
  return r;
}

inline QueryResult check_consistency(const RuleSet& rs, Engine engine = Engine::Auto) {
  const std::vector<Atom> domain = rs.declared();
  const Formula premises = compile_ruleset(rs);
  QueryResult r{Verdict::Inconsistent, std::nullopt, detail::pick(engine, horn_eligible(rs)), {}};
  if (r.engine == Engine::Horn) {
    HornConsistency h = horn_consistent(rs);
    r.stats.horn_steps = h.steps;
    r.stats.clauses = h.clauses;
    r.stats.variables = domain.size();
    if (h.consistent) {
      r.verdict = Verdict::Consistent;
      r.witness = detail::restrict_to(*h.model, domain);
    }
  } else {
    auto sat = detail::sat_check(premises, domain);
    r.stats = sat.stats;
    if (sat.model) {
      r.verdict = Verdict::Consistent;
      r.witness = std::move(sat.model);
    }
  }
  if (r.verdict == Verdict::Consistent) detail::check_witness(premises, r, std::nullopt);
  return r;
}

enum class ObligationStatus { Obliged, NotObliged };

inline const char* to_string(ObligationStatus s) {
  return s == ObligationStatus::Obliged ? "OBLIGED" : "NOT-OBLIGED";
}

struct ObligationReport {
  Atom atom;
  ObligationStatus status;
};

// Status of every declared obligation atom, in declaration order. Refuses
// inconsistent rule sets, where every obligation would be entailed.
inline std::vector<ObligationReport> derive_obligations(const RuleSet& rs,
                                                        Engine engine = Engine::Auto,
                                                        QueryStats* stats = nullptr) {
  QueryResult consistency = check_consistency(rs, engine);
  auto accumulate = [&](const QueryStats& s) {
    if (!stats) return;
    stats->decisions += s.decisions;
    stats->propagations += s.propagations;
    stats->conflicts += s.conflicts;
    stats->horn_steps += s.horn_steps;
    stats->clauses += s.clauses;
    stats->variables = std::max(stats->variables, s.variables);
  };
  accumulate(consistency.stats);
  if (consistency.verdict == Verdict::Inconsistent) throw InconsistentRuleSet();
  std::vector<ObligationReport> out;
  out.reserve(rs.obligations.size());
  for (const auto& o : rs.obligations) {
    QueryResult r = entails(rs, variable(o), engine);
    accumulate(r.stats);
    out.push_back({o, r.verdict == Verdict::Entailed ? ObligationStatus::Obliged
                                                     : ObligationStatus::NotObliged});
  }
  return out;
}

} // namespace sleecc

#endif // SLEECC_QUERY_HPP
