#ifndef SLEECC_REDUCTION_HPP
#define SLEECC_REDUCTION_HPP

#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sleecc/dimacs.hpp"
#include "sleecc/ruleset.hpp"

namespace sleecc {

// A 3-CNF formula: every clause has exactly three literals.
struct CnfInput {
  std::vector<std::array<Literal, 3>> clauses;

  // Variables in order of first occurrence.
  std::vector<Atom> variables() const {
    std::vector<Atom> out;
    std::set<Atom> seen;
    for (const auto& c : clauses)
      for (const auto& l : c)
        if (seen.insert(l.atom).second) out.push_back(l.atom);
    return out;
  }

  Formula to_formula() const {
    std::vector<Formula> parts;
    for (const auto& c : clauses)
      parts.push_back(disjoin(c[0].to_formula(), disjoin(c[1].to_formula(), c[2].to_formula())));
    return conjoin_all(parts);
  }
};

inline Literal complement(const Literal& l) { return Literal{l.atom, !l.positive}; }

// One rule per clause (l1 or l2 or l3):
//   IF ~l1 THEN l3, UNLESS l2 IN WHICH CASE true
// where ~p = not p and ~(not p) = p. Every variable is declared sensed; the
// sensed/obligation convention is not imposed on the outcomes.
inline RuleSet encode_3cnf(const CnfInput& cnf) {
  RuleSet rs;
  rs.sensed = cnf.variables();
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto& c = cnf.clauses[i];
    rs.rules.emplace_back(std::vector<Formula>{complement(c[0]).to_formula(), c[1].to_formula()},
                          std::vector<Formula>{c[2].to_formula(), truth()},
                          "c" + std::to_string(i + 1));
  }
  return rs;
}

// Reads a 3-CNF in DIMACS format. Variables are named by "c <atom> <index>"
// comments when present and x<index> otherwise.
inline CnfInput read_3cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::map<int, Atom> names;
  bool header = false;
  int declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string name;
      int index = 0;
      if (ls >> name >> index && index > 0 && is_identifier(name)) names.emplace(index, Atom(name));
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf")
        throw DimacsError(lineno, "malformed problem line");
      header = true;
      continue;
    }
    if (!header) throw DimacsError(lineno, "clause before problem line");
    std::istringstream cl(line);
    long lit = 0;
    while (cl >> lit) {
      if (lit == 0) {
        raw.push_back(std::move(current));
        current.clear();
      } else {
        if (std::labs(lit) > declared_vars) throw DimacsError(lineno, "literal out of range");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!cl.eof()) throw DimacsError(lineno, "unexpected token");
  }
  if (!header) throw DimacsError(lineno, "missing problem line");
  if (!current.empty()) throw DimacsError(lineno, "last clause is not terminated by 0");
  if (raw.size() != declared_clauses) throw DimacsError(lineno, "clause count mismatch");

  CnfInput cnf;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != 3)
      throw DimacsError(lineno, "clause " + std::to_string(i + 1) + " does not have exactly 3 literals");
    std::array<Literal, 3> clause{Literal{Atom("x"), true}, Literal{Atom("x"), true},
                                  Literal{Atom("x"), true}};
    for (std::size_t j = 0; j < 3; ++j) {
      int v = std::abs(raw[i][j]);
      auto it = names.find(v);
      Atom a = it != names.end() ? it->second : Atom("x" + std::to_string(v));
      clause[j] = Literal{std::move(a), raw[i][j] > 0};
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

} // namespace sleecc

#endif // SLEECC_REDUCTION_HPP
