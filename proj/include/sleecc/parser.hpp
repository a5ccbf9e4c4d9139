#ifndef SLEECC_PARSER_HPP
#define SLEECC_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sleecc/errors.hpp"
#include "sleecc/formula.hpp"
#include "sleecc/ruleset.hpp"

namespace sleecc {

// Grammar (keywords are case-insensitive, atoms case-sensitive):
//
//   file     ::= item*
//   item     ::= "sense" atom* | "obligation" atom* | "message" atom STRING | rule
//   rule     ::= "rule" [ident ":"] "IF" formula "THEN" formula
//                ([","] "UNLESS" formula "IN" "WHICH" "CASE" formula)* "."
//   formula  ::= or ["->" formula]
//   or       ::= and ["or" or]
//   and      ::= unary ["and" and]
//   unary    ::= "not" unary | primary
//   primary  ::= atom | "true" | "false" | "(" formula ")"
//   atom     ::= ident ["(" ident ("," ident)* ")"]
//
// "#" starts a comment that runs to the end of the line.

namespace detail {

enum class Tok {
  Ident,
  String,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Arrow,
  // keywords
  Sense,
  Obligation,
  Message,
  Rule,
  If,
  Then,
  Unless,
  In,
  Which,
  Case,
  Not,
  And,
  Or,
  True,
  False,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline const std::map<std::string, Tok, std::less<>>& keywords() {
  static const std::map<std::string, Tok, std::less<>> table{
      {"sense", Tok::Sense}, {"obligation", Tok::Obligation}, {"message", Tok::Message},
      {"rule", Tok::Rule},   {"if", Tok::If},                 {"then", Tok::Then},
      {"unless", Tok::Unless}, {"in", Tok::In},               {"which", Tok::Which},
      {"case", Tok::Case},   {"not", Tok::Not},               {"and", Tok::And},
      {"or", Tok::Or},       {"true", Tok::True},             {"false", Tok::False},
  };
  return table;
}

inline std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::End: return "end of input";
  case Tok::String: return "string";
  default: return "'" + t.text + "'";
  }
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  if (src.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token tok{Tok::End, std::string(1, c), line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::size_t start = i;
      while (i < src.size() && is_ident_char(src[i])) advance();
      tok.text = std::string(src.substr(start, i - start));
      std::string lower;
      for (char ch : tok.text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      auto kw = keywords().find(lower);
      tok.kind = kw == keywords().end() ? Tok::Ident : kw->second;
      out.push_back(std::move(tok));
      continue;
    }
    if (c == '"') {
      advance();
      std::string text;
      while (true) {
        if (i >= src.size() || src[i] == '\n')
          throw SyntaxError(tok.line, tok.column, "closing '\"'", "end of line");
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) advance();
        text += src[i];
        advance();
      }
      advance();
      tok.kind = Tok::String;
      tok.text = std::move(text);
      out.push_back(std::move(tok));
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      tok.kind = Tok::Arrow;
      tok.text = "->";
      advance();
      advance();
      out.push_back(std::move(tok));
      continue;
    }
    switch (c) {
    case '(': tok.kind = Tok::LParen; break;
    case ')': tok.kind = Tok::RParen; break;
    case ',': tok.kind = Tok::Comma; break;
    case ':': tok.kind = Tok::Colon; break;
    case '.': tok.kind = Tok::Dot; break;
    default: throw SyntaxError(line, col, "a token", "'" + tok.text + "'");
    }
    advance();
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_end() const { return at(Tok::End); }

  Token take() {
    Token t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return take();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().line, peek().column, expected, describe(peek()));
  }

  struct Located {
    Atom atom;
    std::size_t line;
    std::size_t column;
  };

  Atom atom() {
    if (!at(Tok::Ident)) fail("atom");
    Token name = take();
    if (!is_identifier(name.text))
      throw SyntaxError(name.line, name.column, "atom starting with a lowercase letter",
                        describe(name));
    std::vector<std::string> args;
    if (accept(Tok::LParen)) {
      do {
        if (!at(Tok::Ident) || !is_identifier(peek().text)) fail("constant");
        args.push_back(take().text);
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    Atom a(name.text, std::move(args));
    uses_.push_back({a, name.line, name.column});
    return a;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return implies(lhs, formula());
    return lhs;
  }

  // Every atom parsed so far, with its position.
  const std::vector<Located>& uses() const noexcept { return uses_; }

private:
  Formula disjunction() {
    Formula lhs = conjunction();
    if (accept(Tok::Or)) return disjoin(lhs, disjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (accept(Tok::And)) return conjoin(lhs, conjunction());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::Not)) return negate(unary());
    return primary();
  }

  Formula primary() {
    if (accept(Tok::True)) return truth();
    if (accept(Tok::False)) return falsity();
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Ident)) return variable(atom());
    fail("formula");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Located> uses_;
};

inline std::string where(std::size_t line, std::size_t column) {
  return std::to_string(line) + ":" + std::to_string(column);
}

} // namespace detail

// Parses a formula in canonical text syntax. Atoms need no declaration.
inline Formula parse_formula(std::string_view text) {
  detail::Parser p(text);
  Formula f = p.formula();
  if (!p.at_end()) p.fail("end of formula");
  return f;
}

inline RuleSet parse_ruleset(std::string_view text) {
  using detail::Tok;
  detail::Parser p(text);
  RuleSet rs;
  std::set<Atom> declared;

  auto declare = [&](std::vector<Atom>& into) {
    while (p.at(Tok::Ident)) {
      auto tok = p.peek();
      Atom a = p.atom();
      if (!declared.insert(a).second)
        throw DuplicateDeclaration(a.to_string(), detail::where(tok.line, tok.column));
      into.push_back(std::move(a));
    }
  };

  std::size_t declared_uses = 0;
  std::vector<detail::Parser::Located> rule_uses;
  auto collect_rule_uses = [&] {
    const auto& all = p.uses();
    rule_uses.insert(rule_uses.end(), all.begin() + static_cast<std::ptrdiff_t>(declared_uses),
                     all.end());
    declared_uses = all.size();
  };
  auto skip_uses = [&] { declared_uses = p.uses().size(); };

  while (!p.at_end()) {
    if (p.accept(Tok::Sense)) {
      declare(rs.sensed);
      skip_uses();
    } else if (p.accept(Tok::Obligation)) {
      declare(rs.obligations);
      skip_uses();
    } else if (p.accept(Tok::Message)) {
      Atom a = p.atom();
      collect_rule_uses();
      std::string msg = p.expect(Tok::String, "message string").text;
      rs.messages[a] = std::move(msg);
    } else if (p.accept(Tok::Rule)) {
      std::optional<std::string> name;
      if (p.at(Tok::Ident)) {
        auto tok = p.take();
        if (!is_identifier(tok.text))
          throw SyntaxError(tok.line, tok.column, "rule name", detail::describe(tok));
        name = tok.text;
        p.expect(Tok::Colon, "':'");
      }
      p.expect(Tok::If, "IF");
      std::vector<Formula> conds, outs;
      conds.push_back(p.formula());
      p.expect(Tok::Then, "THEN");
      outs.push_back(p.formula());
      while (true) {
        if (p.at(Tok::Comma)) {
          p.take();
          if (!p.at(Tok::Unless)) p.fail("UNLESS");
        }
        if (!p.accept(Tok::Unless)) break;
        conds.push_back(p.formula());
        p.expect(Tok::In, "IN WHICH CASE");
        p.expect(Tok::Which, "WHICH CASE");
        p.expect(Tok::Case, "CASE");
        outs.push_back(p.formula());
      }
      p.expect(Tok::Dot, "'.' or UNLESS");
      collect_rule_uses();
      rs.rules.emplace_back(std::move(conds), std::move(outs), std::move(name));
    } else {
      p.fail("'sense', 'obligation', 'message' or 'rule'");
    }
  }

  for (const auto& use : rule_uses)
    if (!declared.count(use.atom))
      throw UndeclaredAtom(use.atom.to_string(), detail::where(use.line, use.column));
  for (const auto& [atom, text] : rs.messages)
    if (!rs.is_obligation(atom))
      throw Error("message attached to '" + atom.to_string() + "', which is not an obligation");
  return rs;
}

// Parses a .facts file against a rule set: whitespace-separated literals,
// each `atom` or `not atom`. Repeating a literal is harmless.
inline std::vector<Literal> parse_facts(std::string_view text, const RuleSet& rs) {
  using detail::Tok;
  detail::Parser p(text);
  std::vector<Literal> facts;
  while (!p.at_end()) {
    bool positive = !p.accept(Tok::Not);
    auto tok = p.peek();
    Atom a = p.atom();
    if (!rs.is_declared(a))
      throw UndeclaredAtom(a.to_string(), detail::where(tok.line, tok.column));
    if (!rs.is_sensed(a)) throw NotSensed(a.to_string());
    bool duplicate = false;
    for (const auto& f : facts) {
      if (f.atom != a) continue;
      if (f.positive != positive) throw ContradictoryFacts(a.to_string());
      duplicate = true;
    }
    if (!duplicate) facts.push_back(Literal{std::move(a), positive});
  }
  return facts;
}

// Parses rules and facts and attaches the facts to the rule set.
inline RuleSet parse_ruleset(std::string_view rules, std::string_view facts) {
  RuleSet rs = parse_ruleset(rules);
  rs.facts = parse_facts(facts, rs);
  return rs;
}

} // namespace sleecc

#endif // SLEECC_PARSER_HPP
