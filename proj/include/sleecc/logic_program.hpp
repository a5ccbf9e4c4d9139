#ifndef SLEECC_LOGIC_PROGRAM_HPP
#define SLEECC_LOGIC_PROGRAM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sleecc/errors.hpp"
#include "sleecc/parser.hpp"
#include "sleecc/ruleset.hpp"

namespace sleecc {

// Ground logic program: head :- body. Negative body literals are read as
// negation as failure.
struct ProgramRule {
  Atom head;
  std::vector<Literal> body;

  friend bool operator==(const ProgramRule&, const ProgramRule&) = default;
};

struct GroundProgram {
  std::vector<ProgramRule> rules;
  std::vector<Atom> facts;
  // Message per rule (same index as rules), for the Prolog export.
  std::vector<std::string> messages;
};

struct ExportOptions {
  bool messages = false;        // Prolog only: append write/1 goals
  bool compat_scaffold = false; // mention body-only predicates in a fact or directive
};

namespace detail {

// Conditions: a sensed literal, a conjunction of them, or true (no literal).
inline std::optional<std::vector<Literal>> sensed_literals(const RuleSet& rs, const Formula& f) {
  if (is_truth(f)) return std::vector<Literal>{};
  if (is_conjunction(f)) {
    auto l = sensed_literals(rs, f.operand().left().operand());
    auto r = sensed_literals(rs, f.operand().right().operand());
    if (!l || !r) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
  }
  bool positive = true;
  const Formula* g = &f;
  while (g->is_not()) {
    positive = !positive;
    g = &g->operand();
  }
  if (!g->is_var() || !rs.is_sensed(g->atom())) return std::nullopt;
  return std::vector<Literal>{Literal{g->atom(), positive}};
}

// Outcomes: an obligation atom or a conjunction of them.
inline std::optional<std::vector<Atom>> obligation_atoms(const RuleSet& rs, const Formula& f) {
  if (is_conjunction(f)) {
    auto l = obligation_atoms(rs, f.operand().left().operand());
    auto r = obligation_atoms(rs, f.operand().right().operand());
    if (!l || !r) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
  }
  if (f.is_var() && rs.is_obligation(f.atom())) return std::vector<Atom>{f.atom()};
  return std::nullopt;
}

// Drops repeated literals; nullopt if the body contains p and not p.
inline std::optional<std::vector<Literal>> normalize_body(const std::vector<Literal>& body) {
  std::vector<Literal> out;
  for (const auto& l : body) {
    for (const auto& k : out)
      if (k.atom == l.atom && k.positive != l.positive) return std::nullopt;
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

inline std::string rule_label(const SleecRule& r, std::size_t index) {
  return r.name() ? *r.name() : "#" + std::to_string(index + 1);
}

} // namespace detail

// Lowers each compiled conjunct (C0 and ... and Ci and not C(i+1)) -> Oi to
// program rules, one per obligation in Oi. "not C(i+1)" with
// C(i+1) = l1 and ... and lk splits into k rules, the j-th carrying the
// complement of lj. Only positive facts are kept: sensed atoms absent from
// the facts are false under the closed-world reading.
inline GroundProgram lower_to_program(const RuleSet& rs) {
  GroundProgram prog;
  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    const auto& rule = rs.rules[r];
    const std::size_t n = rule.conditions().size() - 1;
    std::vector<std::vector<Literal>> cond;
    std::vector<std::vector<Atom>> heads;
    for (std::size_t i = 0; i <= n; ++i) {
      auto c = detail::sensed_literals(rs, rule.conditions()[i]);
      if (!c)
        throw NotExportable("rule " + detail::rule_label(rule, r) + ": condition " +
                            std::to_string(i) + " is not a conjunction of sensed literals");
      auto o = detail::obligation_atoms(rs, rule.outcomes()[i]);
      if (!o)
        throw NotExportable("rule " + detail::rule_label(rule, r) + ": outcome " +
                            std::to_string(i) + " is not a conjunction of obligation atoms");
      cond.push_back(std::move(*c));
      heads.push_back(std::move(*o));
    }
    auto emit = [&](const std::vector<Literal>& body, const std::vector<Atom>& hs) {
      auto normalized = detail::normalize_body(body);
      if (!normalized) return;
      for (const auto& h : hs) {
        prog.rules.push_back({h, *normalized});
        auto msg = rs.messages.find(h);
        prog.messages.push_back(msg != rs.messages.end() ? msg->second
                                                         : "I have the obligation " + h.to_string());
      }
    };
    std::vector<Literal> prefix;
    for (std::size_t i = 0; i <= n; ++i) {
      prefix.insert(prefix.end(), cond[i].begin(), cond[i].end());
      if (i == n) {
        emit(prefix, heads[i]);
        break;
      }
      // not C(i+1); when C(i+1) is true this conjunct is vacuous
      for (const auto& l : cond[i + 1]) {
        auto body = prefix;
        body.push_back(Literal{l.atom, !l.positive});
        emit(body, heads[i]);
      }
    }
  }
  for (const auto& f : rs.facts)
    if (f.positive) prog.facts.push_back(f.atom);
  return prog;
}

namespace detail {

enum class Dialect { Asp, Prolog };

inline std::string prolog_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string render(const GroundProgram& prog, const RuleSet& rs, Dialect dialect,
                          const ExportOptions& opts) {
  const char* neg = dialect == Dialect::Asp ? "not " : "\\+ ";
  std::string out;
  for (std::size_t i = 0; i < prog.rules.size(); ++i) {
    const auto& r = prog.rules[i];
    out += r.head.to_string();
    std::vector<std::string> goals;
    for (const auto& l : r.body) goals.push_back((l.positive ? "" : neg) + l.atom.to_string());
    if (dialect == Dialect::Prolog && opts.messages) {
      goals.push_back("write(" + prolog_string(prog.messages[i]) + ")");
      goals.push_back("nl");
    }
    for (std::size_t g = 0; g < goals.size(); ++g) out += (g == 0 ? " :- " : ", ") + goals[g];
    out += ".\n";
  }
  for (const auto& f : prog.facts) out += f.to_string() + ".\n";

  if (opts.compat_scaffold) {
    // predicate name/arity -> whether it occurs in a head or a fact
    std::map<std::pair<std::string, std::size_t>, bool> defined;
    std::set<Atom> used;
    for (const auto& r : prog.rules) {
      defined[{r.head.name(), r.head.arity()}] = true;
      used.insert(r.head);
      for (const auto& l : r.body) {
        defined.try_emplace({l.atom.name(), l.atom.arity()}, false);
        used.insert(l.atom);
      }
    }
    for (const auto& f : prog.facts) {
      defined[{f.name(), f.arity()}] = true;
      used.insert(f);
    }
    for (const auto& a : rs.declared()) used.insert(a);
    for (const auto& [pred, is_defined] : defined) {
      if (is_defined) continue;
      const auto& [name, arity] = pred;
      std::optional<Atom> filler;
      if (arity > 0) {
        filler = Atom(name, std::vector<std::string>(arity, "someoneelse"));
        if (used.count(*filler)) filler.reset();
      }
      if (filler) {
        out += filler->to_string() + ".\n";
      } else if (dialect == Dialect::Asp) {
        out += "#defined " + name + "/" + std::to_string(arity) + ".\n";
      } else {
        out += ":- dynamic " + name + "/" + std::to_string(arity) + ".\n";
      }
    }
  }
  return out;
}

} // namespace detail

// Answer-set program text: `h :- a, not b.` per rule, `p.` per positive fact.
inline std::string export_asp(const RuleSet& rs, const ExportOptions& opts = {}) {
  return detail::render(lower_to_program(rs), rs, detail::Dialect::Asp, opts);
}

// Prolog text: same program with \+ for negation as failure.
inline std::string export_prolog(const RuleSet& rs, const ExportOptions& opts = {}) {
  return detail::render(lower_to_program(rs), rs, detail::Dialect::Prolog, opts);
}

// ---------------------------------------------------------------------------
// Closed-world replay.

// Reads back the ground programs produced above (either dialect). Comments
// (%), directives (#... and :- ...) and write/nl goals are skipped.
inline GroundProgram parse_program(std::string_view text) {
  std::vector<std::string> statements;
  std::string current;
  bool in_string = false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      current += c;
      if (c == '\\' && i + 1 < text.size()) current += text[++i];
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '"') in_string = true;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '.' && depth == 0) {
      statements.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  auto trim = [](std::string s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return std::string();
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
  };
  if (!trim(current).empty()) throw NotExportable("program text ends without '.'");

  auto split_goals = [](const std::string& body) {
    std::vector<std::string> goals;
    std::string g;
    int d = 0;
    bool str = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (str) {
        g += c;
        if (c == '\\' && i + 1 < body.size()) g += body[++i];
        else if (c == '"') str = false;
        continue;
      }
      if (c == '"') str = true;
      if (c == '(') ++d;
      if (c == ')') --d;
      if (c == ',' && d == 0) {
        goals.push_back(g);
        g.clear();
        continue;
      }
      g += c;
    }
    goals.push_back(g);
    return goals;
  };
  auto read_atom = [](const std::string& s) {
    Formula f = parse_formula(s);
    if (!f.is_var()) throw NotExportable("expected a ground atom, found '" + s + "'");
    return f.atom();
  };

  GroundProgram prog;
  for (auto& raw : statements) {
    std::string st = trim(raw);
    if (st.empty() || st[0] == '#' || st.rfind(":-", 0) == 0) continue;
    auto arrow = st.find(":-");
    if (arrow == std::string::npos) {
      prog.facts.push_back(read_atom(st));
      continue;
    }
    ProgramRule rule{read_atom(trim(st.substr(0, arrow))), {}};
    for (auto& goal : split_goals(st.substr(arrow + 2))) {
      std::string g = trim(goal);
      if (g == "nl" || g.rfind("write(", 0) == 0) continue;
      bool positive = true;
      if (g.rfind("\\+", 0) == 0) {
        positive = false;
        g = trim(g.substr(2));
      } else if (g.rfind("not ", 0) == 0) {
        positive = false;
        g = trim(g.substr(4));
      }
      rule.body.push_back(Literal{read_atom(g), positive});
    }
    prog.rules.push_back(std::move(rule));
  }
  return prog;
}

// Forward evaluation with the facts as the only true base atoms. Atoms under
// negation must not be derivable by any rule, which makes the result unique.
// Returns the least model: the facts plus every atom derived by a rule.
inline std::set<Atom> replay(const GroundProgram& prog) {
  std::set<Atom> heads;
  for (const auto& r : prog.rules) heads.insert(r.head);
  for (const auto& r : prog.rules)
    for (const auto& l : r.body)
      if (!l.positive && heads.count(l.atom))
        throw NotExportable("'" + l.atom.to_string() + "' is both negated and derived");

  std::set<Atom> truth(prog.facts.begin(), prog.facts.end());
  std::vector<bool> fired(prog.rules.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < prog.rules.size(); ++i) {
      if (fired[i]) continue;
      const auto& r = prog.rules[i];
      bool holds = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
        return truth.count(l.atom) == (l.positive ? 1U : 0U);
      });
      if (!holds) continue;
      fired[i] = true;
      changed = true;
      truth.insert(r.head);
    }
  }
  return truth;
}

inline std::set<Atom> replay(std::string_view program_text) { return replay(parse_program(program_text)); }

// The obligation atoms of rs that hold in the replayed program.
inline std::set<Atom> replay_obligations(std::string_view program_text, const RuleSet& rs) {
  std::set<Atom> out;
  for (const auto& a : replay(program_text))
    if (rs.is_obligation(a)) out.insert(a);
  return out;
}

} // namespace sleecc

#endif // SLEECC_LOGIC_PROGRAM_HPP
