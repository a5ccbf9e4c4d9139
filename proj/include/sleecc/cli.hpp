#ifndef SLEECC_CLI_HPP
#define SLEECC_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "sleecc/sleecc.hpp"

namespace sleecc::cli {

enum class Command { Compile, Check, Entail, Obligations, Export, Encode3Cnf };
enum class Format { Formula, Dimacs, Asp, Prolog };
enum class OutputMode { Human, Json };

// Exit codes.
inline constexpr int kOk = 0;       // success, ENTAILED, CONSISTENT
inline constexpr int kError = 1;    // usage, parse or internal error
inline constexpr int kNegative = 2; // NOT_ENTAILED, INCONSISTENT

struct RunConfig {
  Command command = Command::Check;
  std::string ruleset_path;              // "-" reads standard input
  std::optional<std::string> facts_path;
  std::optional<std::string> query;
  Engine engine = Engine::Auto;
  std::optional<Format> format;
  OutputMode output = OutputMode::Human;
  std::string input_path;                // encode-3cnf: DIMACS input
  bool stats = false;
  bool messages = false;
  bool compat_scaffold = false;
  bool color = false;
};

class UsageError : public Error {
public:
  using Error::Error;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

// Prefixes parse errors with the file they came from.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw Error((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
  }
}

inline RuleSet load(const RunConfig& cfg, std::istream& in) {
  if (cfg.ruleset_path.empty()) throw UsageError("--rules is required");
  std::string text = slurp(cfg.ruleset_path, in);
  RuleSet rs = located(cfg.ruleset_path, [&] { return parse_ruleset(text); });
  if (cfg.facts_path) {
    std::string facts = slurp(*cfg.facts_path, in);
    rs.facts = located(*cfg.facts_path, [&] { return parse_facts(facts, rs); });
  }
  return rs;
}

inline Json witness_json(const RuleSet& rs, const Interpretation& v) {
  Json w = Json::object();
  for (const auto& a : rs.declared()) w[a.to_string()] = v.value(a);
  return w;
}

inline std::string witness_text(const RuleSet& rs, const Interpretation& v) {
  std::string out;
  for (const auto& a : rs.declared()) {
    if (!out.empty()) out += ' ';
    out += a.to_string() + "=" + (v.value(a) ? "true" : "false");
  }
  return out;
}

inline Json stats_json(const QueryStats& s) {
  return Json{{"decisions", s.decisions},   {"propagations", s.propagations},
              {"conflicts", s.conflicts},   {"horn_steps", s.horn_steps},
              {"clauses", s.clauses},       {"variables", s.variables}};
}

inline std::string stats_text(const QueryStats& s) {
  std::ostringstream ss;
  ss << "stats: decisions=" << s.decisions << " propagations=" << s.propagations
     << " conflicts=" << s.conflicts << " horn_steps=" << s.horn_steps << " clauses=" << s.clauses
     << " variables=" << s.variables;
  return ss.str();
}

inline std::string paint(const RunConfig& cfg, const std::string& text, bool good) {
  if (!cfg.color) return text;
  return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

inline bool positive(Verdict v) { return v == Verdict::Entailed || v == Verdict::Consistent; }

inline int report(const RunConfig& cfg, const RuleSet& rs, const QueryResult& r, std::ostream& out) {
  if (cfg.output == OutputMode::Json) {
    Json j{{"verdict", to_string(r.verdict)}};
    if (r.witness) j["witness"] = witness_json(rs, *r.witness);
    j["engine"] = to_string(r.engine);
    j["stats"] = stats_json(r.stats);
    out << j.dump(2) << "\n";
  } else {
    out << paint(cfg, to_string(r.verdict), positive(r.verdict)) << "\n";
    if (r.witness) {
      out << (r.verdict == Verdict::NotEntailed ? "countermodel: " : "model: ")
          << witness_text(rs, *r.witness) << "\n";
    }
    out << "engine: " << to_string(r.engine) << "\n";
    if (cfg.stats) out << stats_text(r.stats) << "\n";
  }
  return positive(r.verdict) ? kOk : kNegative;
}

inline std::string emit(const RuleSet& rs, Format format, const RunConfig& cfg) {
  ExportOptions opts{cfg.messages, cfg.compat_scaffold};
  switch (format) {
  case Format::Formula: return to_string(compile_ruleset(rs)) + "\n";
  case Format::Dimacs: return write_dimacs(to_cnf(compile_ruleset(rs), rs.declared()));
  case Format::Asp: return export_asp(rs, opts);
  case Format::Prolog: return export_prolog(rs, opts);
  }
  return {};
}

inline int execute(const RunConfig& cfg, std::ostream& out, std::istream& in) {
  switch (cfg.command) {
  case Command::Compile:
    out << emit(load(cfg, in), cfg.format.value_or(Format::Formula), cfg);
    return kOk;

  case Command::Export:
    if (!cfg.format) throw UsageError("export requires --format");
    out << emit(load(cfg, in), *cfg.format, cfg);
    return kOk;

  case Command::Check: {
    RuleSet rs = load(cfg, in);
    return report(cfg, rs, check_consistency(rs, cfg.engine), out);
  }

  case Command::Entail: {
    if (!cfg.query) throw UsageError("entail requires --query");
    RuleSet rs = load(cfg, in);
    Formula q = located("--query", [&] { return parse_formula(*cfg.query); });
    return report(cfg, rs, entails(rs, q, cfg.engine), out);
  }

  case Command::Obligations: {
    RuleSet rs = load(cfg, in);
    Engine used = cfg.engine;
    if (used == Engine::Auto) used = horn_eligible(rs) ? Engine::Horn : Engine::Sat;
    QueryStats stats;
    std::vector<ObligationReport> reports;
    try {
      reports = derive_obligations(rs, cfg.engine, &stats);
    } catch (const InconsistentRuleSet&) {
      QueryResult r{Verdict::Inconsistent, std::nullopt, used, stats};
      return report(cfg, rs, r, out);
    }
    if (cfg.output == OutputMode::Json) {
      Json obliged = Json::array();
      Json statuses = Json::object();
      for (const auto& r : reports) {
        if (r.status == ObligationStatus::Obliged) obliged.push_back(r.atom.to_string());
        statuses[r.atom.to_string()] = to_string(r.status);
      }
      Json j{{"verdict", to_string(Verdict::Consistent)},
             {"obligations", obliged},
             {"statuses", statuses},
             {"engine", to_string(used)},
             {"stats", stats_json(stats)}};
      out << j.dump(2) << "\n";
    } else {
      for (const auto& r : reports)
        out << r.atom.to_string() << " "
            << paint(cfg, to_string(r.status), r.status == ObligationStatus::Obliged) << "\n";
      out << "engine: " << to_string(used) << "\n";
      if (cfg.stats) out << stats_text(stats) << "\n";
    }
    return kOk;
  }

  case Command::Encode3Cnf: {
    if (cfg.input_path.empty()) throw UsageError("encode-3cnf requires an input DIMACS file");
    std::string text = slurp(cfg.input_path, in);
    out << to_string(encode_3cnf(read_3cnf(text)));
    return kOk;
  }
  }
  return kError;
}

} // namespace detail

// Runs one command. Errors are reported on `err` and mapped to exit code 1.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  try {
    return detail::execute(cfg, out, in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

} // namespace sleecc::cli

#endif // SLEECC_CLI_HPP
