// sleecc: compile and query SLEEC rule sets from the command line.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "sleecc/cli.hpp"

using namespace sleecc;
using sleecc::cli::Command;
using sleecc::cli::Format;
using sleecc::cli::OutputMode;
using sleecc::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Compile SLEEC rules to propositional logic and reason about them"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output = "human";
  bool json = false;

  const std::map<std::string, Engine> engines{
      {"auto", Engine::Auto}, {"sat", Engine::Sat}, {"horn", Engine::Horn}};
  const std::map<std::string, Format> formats{{"formula", Format::Formula},
                                              {"dimacs", Format::Dimacs},
                                              {"asp", Format::Asp},
                                              {"prolog", Format::Prolog}};
  const std::map<std::string, OutputMode> outputs{{"human", OutputMode::Human},
                                                  {"json", OutputMode::Json}};

  auto rules_opts = [&](CLI::App* sub) {
    sub->add_option("--rules,-r", cfg.ruleset_path, "Rule set (.sleec), '-' for stdin")->required();
    sub->add_option("--facts,-f", cfg.facts_path, "Facts file (.facts)");
  };
  auto query_opts = [&](CLI::App* sub) {
    sub->add_option("--engine,-e", cfg.engine, "auto, sat or horn")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    sub->add_option("--output,-o", cfg.output, "human or json")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    sub->add_flag("--json", json, "Same as --output json");
    sub->add_flag("--stats", cfg.stats, "Print solver and propagation statistics");
  };
  auto export_opts = [&](CLI::App* sub) {
    sub->add_flag("--messages", cfg.messages, "Prolog: append message goals to each rule");
    sub->add_flag("--compat-scaffold", cfg.compat_scaffold,
                  "Mention predicates that occur only in rule bodies");
  };

  auto* compile = app.add_subcommand("compile", "Print the compiled rule set");
  rules_opts(compile);
  compile->add_option("--emit,--format", cfg.format, "formula (default), dimacs, asp or prolog")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  export_opts(compile);

  auto* check = app.add_subcommand("check", "Check that the rule set is consistent");
  rules_opts(check);
  query_opts(check);

  auto* entail = app.add_subcommand("entail", "Decide whether the rules and facts entail a query");
  rules_opts(entail);
  query_opts(entail);
  entail->add_option("--query,-q", cfg.query, "Formula, e.g. \"n and s\"")->required();

  auto* obligations = app.add_subcommand("obligations", "Derive the obligations in force");
  rules_opts(obligations);
  query_opts(obligations);

  auto* exp = app.add_subcommand("export", "Export to DIMACS, ASP or Prolog");
  rules_opts(exp);
  exp->add_option("--format", cfg.format, "formula, dimacs, asp or prolog")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->required();
  export_opts(exp);

  auto* encode = app.add_subcommand("encode-3cnf", "Encode a 3-CNF (DIMACS) as a rule set");
  encode->add_option("input", cfg.input_path, "DIMACS file, '-' for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kError;
  }

  if (compile->parsed()) cfg.command = Command::Compile;
  else if (check->parsed()) cfg.command = Command::Check;
  else if (entail->parsed()) cfg.command = Command::Entail;
  else if (obligations->parsed()) cfg.command = Command::Obligations;
  else if (exp->parsed()) cfg.command = Command::Export;
  else cfg.command = Command::Encode3Cnf;

  if (json) cfg.output = OutputMode::Json;
  cfg.color = std::getenv("SLEECC_NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0;

  return cli::run(cfg, std::cout, std::cerr, std::cin);
}
