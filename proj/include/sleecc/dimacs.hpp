#ifndef SLEECC_DIMACS_HPP
#define SLEECC_DIMACS_HPP

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sleecc/cnf.hpp"
#include "sleecc/errors.hpp"
#include "sleecc/parser.hpp"

namespace sleecc {

// DIMACS CNF with the variable map as leading "c <atom> <index>" comments.
// Output is fully determined by the clause set: LF line endings, clauses in
// stored order.
inline std::string write_dimacs(const ClauseSet& cs) {
  std::string out;
  for (int i = 0; i < cs.num_atoms(); ++i)
    out += "c " + cs.atoms()[static_cast<std::size_t>(i)].to_string() + " " + std::to_string(i + 1) + "\n";
  out += "p cnf " + std::to_string(cs.num_vars()) + " " + std::to_string(cs.clauses().size()) + "\n";
  for (const auto& clause : cs.clauses()) {
    for (int lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

class DimacsError : public Error {
public:
  DimacsError(std::size_t line, const std::string& what)
      : Error("dimacs:" + std::to_string(line) + ": " + what) {}
};

// Reads DIMACS CNF. Comments of the form "c <atom> <index>" name variables;
// named indices must be exactly 1..k, every other variable is auxiliary.
inline ClauseSet read_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<int, Atom>> names;
  bool header = false;
  int declared_vars = 0;
  std::size_t declared_clauses = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string name;
      int index = 0;
      if (ls >> name >> index && index > 0) {
        try {
          Formula f = parse_formula(name);
          if (f.is_var()) names.emplace_back(index, f.atom());
        } catch (const Error&) {
          // free-form comment
        }
      }
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" || declared_vars < 0)
        throw DimacsError(lineno, "malformed problem line");
      header = true;
      continue;
    }
    if (!header) throw DimacsError(lineno, "clause before problem line");
    std::istringstream cl(line);
    long lit = 0;
    while (cl >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > declared_vars) throw DimacsError(lineno, "literal out of range");
      current.push_back(static_cast<int>(lit));
    }
    if (!cl.eof()) throw DimacsError(lineno, "unexpected token");
  }
  if (!header) throw DimacsError(lineno, "missing problem line");
  if (!current.empty()) throw DimacsError(lineno, "last clause is not terminated by 0");
  if (clauses.size() != declared_clauses)
    throw DimacsError(lineno, "problem line announces " + std::to_string(declared_clauses) +
                                  " clauses, found " + std::to_string(clauses.size()));

  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ClauseSet cs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].first != static_cast<int>(i + 1) || names[i].first > declared_vars)
      throw DimacsError(lineno, "variable names must cover indices 1.." + std::to_string(names.size()));
    if (cs.add_atom(names[i].second) != static_cast<int>(i + 1))
      throw DimacsError(lineno, "atom named twice: " + names[i].second.to_string());
  }
  while (cs.num_vars() < declared_vars) cs.add_auxiliary();
  for (auto& c : clauses) cs.add_clause(std::move(c));
  return cs;
}

} // namespace sleecc

#endif // SLEECC_DIMACS_HPP
