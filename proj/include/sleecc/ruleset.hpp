#ifndef SLEECC_RULESET_HPP
#define SLEECC_RULESET_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sleecc/formula.hpp"

namespace sleecc {

struct Literal {
  Atom atom;
  bool positive = true;

  Formula to_formula() const { return positive ? variable(atom) : negate(variable(atom)); }
  std::string to_string() const { return (positive ? "" : "not ") + atom.to_string(); }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// IF C0 THEN O0, UNLESS C1 IN WHICH CASE O1, ..., UNLESS Cn IN WHICH CASE On.
// Clause order is significant and preserved.
class SleecRule {
public:
  SleecRule(std::vector<Formula> conditions, std::vector<Formula> outcomes,
            std::optional<std::string> name = std::nullopt)
      : conditions_(std::move(conditions)), outcomes_(std::move(outcomes)), name_(std::move(name)) {
    if (conditions_.empty() || conditions_.size() != outcomes_.size())
      throw std::invalid_argument("a rule needs as many outcomes as conditions, and at least one");
  }

  const std::vector<Formula>& conditions() const noexcept { return conditions_; }
  const std::vector<Formula>& outcomes() const noexcept { return outcomes_; }
  const std::optional<std::string>& name() const noexcept { return name_; }
  // Number of UNLESS clauses.
  std::size_t unless_count() const noexcept { return conditions_.size() - 1; }

  friend bool operator==(const SleecRule&, const SleecRule&) = default;

private:
  std::vector<Formula> conditions_;
  std::vector<Formula> outcomes_;
  std::optional<std::string> name_;
};

// Declared atoms, rules and sensed facts. The parser establishes the
// declaration invariants; code that assembles a RuleSet by hand can call
// validate().
struct RuleSet {
  std::vector<Atom> sensed;
  std::vector<Atom> obligations;
  std::vector<SleecRule> rules;
  std::vector<Literal> facts;
  // Optional user-facing text per obligation, used by the logic-program export.
  std::map<Atom, std::string> messages;

  bool is_sensed(const Atom& a) const {
    return std::find(sensed.begin(), sensed.end(), a) != sensed.end();
  }
  bool is_obligation(const Atom& a) const {
    return std::find(obligations.begin(), obligations.end(), a) != obligations.end();
  }
  bool is_declared(const Atom& a) const { return is_sensed(a) || is_obligation(a); }

  // Sensed atoms first, then obligations, each in declaration order.
  std::vector<Atom> declared() const {
    std::vector<Atom> out = sensed;
    out.insert(out.end(), obligations.begin(), obligations.end());
    return out;
  }

  void validate() const {
    std::vector<Atom> all = declared();
    std::sort(all.begin(), all.end());
    if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
      throw DuplicateDeclaration(it->to_string());
    auto check = [&](const Formula& f) {
      for (const auto& a : atoms(f))
        if (!is_declared(a)) throw UndeclaredAtom(a.to_string());
    };
    for (const auto& r : rules) {
      for (const auto& c : r.conditions()) check(c);
      for (const auto& o : r.outcomes()) check(o);
    }
    for (std::size_t i = 0; i < facts.size(); ++i) {
      const auto& lit = facts[i];
      if (!is_declared(lit.atom)) throw UndeclaredAtom(lit.atom.to_string());
      if (!is_sensed(lit.atom)) throw NotSensed(lit.atom.to_string());
      for (std::size_t j = 0; j < i; ++j)
        if (facts[j].atom == lit.atom && facts[j].positive != lit.positive)
          throw ContradictoryFacts(lit.atom.to_string());
    }
  }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

inline std::string to_string(const SleecRule& r) {
  std::string out = "rule ";
  if (r.name()) out += *r.name() + ": ";
  out += "IF " + to_string(r.conditions()[0]) + " THEN " + to_string(r.outcomes()[0]);
  for (std::size_t i = 1; i < r.conditions().size(); ++i)
    out += " UNLESS " + to_string(r.conditions()[i]) + " IN WHICH CASE " + to_string(r.outcomes()[i]);
  return out + ".";
}

namespace detail {
inline std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
} // namespace detail

// Canonical .sleec text. Facts live in their own file and are not printed.
inline std::string to_string(const RuleSet& rs) {
  std::string out;
  auto decl = [&](const char* keyword, const std::vector<Atom>& list) {
    if (list.empty()) return;
    out += keyword;
    for (const auto& a : list) out += " " + a.to_string();
    out += "\n";
  };
  decl("sense", rs.sensed);
  decl("obligation", rs.obligations);
  for (const auto& [atom, text] : rs.messages)
    out += "message " + atom.to_string() + " " + detail::quote(text) + "\n";
  for (const auto& r : rs.rules) out += to_string(r) + "\n";
  return out;
}

// .facts text: one literal per line.
inline std::string facts_to_string(const std::vector<Literal>& facts) {
  std::string out;
  for (const auto& f : facts) out += f.to_string() + "\n";
  return out;
}

} // namespace sleecc

#endif // SLEECC_RULESET_HPP
