#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace sleecc;

namespace {

Formula v(const char* name) { return variable(Atom(name)); }

RuleSet ground(const char* facts_file) {
  RuleSet rs = parse_ruleset(oracle::read_file(SLEECC_DATA_DIR "/curtains_ground.sleec"));
  if (facts_file) rs.facts = parse_facts(oracle::read_file(std::string(SLEECC_DATA_DIR "/") + facts_file), rs);
  return rs;
}

std::set<std::string> names(const std::set<Atom>& atoms) {
  std::set<std::string> out;
  for (const auto& a : atoms) out.insert(a.to_string());
  return out;
}

// Adds "not p" for every sensed atom without a fact.
RuleSet closed_world(RuleSet rs) {
  for (const auto& a : rs.sensed) {
    bool present = false;
    for (const auto& f : rs.facts) present = present || f.atom == a;
    if (!present) rs.facts.push_back(Literal{a, false});
  }
  return rs;
}

} // namespace

TEST(Encode3Cnf, ClauseShape) {
  CnfInput cnf;
  cnf.clauses.push_back({Literal{Atom("p"), true}, Literal{Atom("q"), true}, Literal{Atom("r"), true}});
  RuleSet rs = encode_3cnf(cnf);
  ASSERT_EQ(rs.rules.size(), 1U);
  EXPECT_EQ(to_string(rs.rules[0]), "rule c1: IF not p THEN r UNLESS q IN WHICH CASE true.");
  EXPECT_TRUE(equiv_bruteforce(compile_rule(rs.rules[0]), disjoin(v("p"), disjoin(v("q"), v("r")))));
  EXPECT_EQ(rs.sensed.size(), 3U);
  EXPECT_TRUE(rs.obligations.empty());
}

TEST(Encode3Cnf, NegativeLiterals) {
  CnfInput cnf;
  cnf.clauses.push_back({Literal{Atom("p"), false}, Literal{Atom("q"), false}, Literal{Atom("r"), false}});
  RuleSet rs = encode_3cnf(cnf);
  EXPECT_EQ(to_string(rs.rules[0]), "rule c1: IF p THEN not r UNLESS not q IN WHICH CASE true.");
  EXPECT_TRUE(equiv_bruteforce(compile_rule(rs.rules[0]), cnf.to_formula()));
}

TEST(Encode3Cnf, ContradictoryInput) {
  CnfInput cnf;
  Literal p{Atom("p"), true}, np{Atom("p"), false};
  cnf.clauses.push_back({p, p, p});
  cnf.clauses.push_back({np, np, np});
  EXPECT_EQ(check_consistency(encode_3cnf(cnf)).verdict, Verdict::Inconsistent);
}

TEST(Encode3Cnf, EncodedTextParsesBack) {
  oracle::Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    RuleSet rs = encode_3cnf(oracle::random_3cnf(rng, 6, 10));
    EXPECT_EQ(parse_ruleset(to_string(rs)), rs);
  }
}

TEST(Encode3Cnf, RandomSatisfiabilityMatches) {
  oracle::Rng rng(71);
  int sat = 0;
  for (int i = 0; i < 60; ++i) {
    CnfInput cnf = oracle::random_3cnf(rng, 10, 50);
    RuleSet rs = encode_3cnf(cnf);
    bool expected = oracle::satisfiable(cnf.to_formula(), cnf.variables());
    sat += expected ? 1 : 0;
    ASSERT_EQ(check_consistency(rs).verdict == Verdict::Consistent, expected);
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
      const auto& cl = cnf.clauses[c];
      Formula clause = disjoin(cl[0].to_formula(), disjoin(cl[1].to_formula(), cl[2].to_formula()));
      ASSERT_TRUE(oracle::equivalent(compile_rule(rs.rules[c]), clause, cnf.variables()));
    }
  }
  EXPECT_GT(sat, 0);
  EXPECT_LT(sat, 60);
}

TEST(Read3Cnf, NamesAndErrors) {
  CnfInput cnf = read_3cnf(oracle::read_file(SLEECC_DATA_DIR "/small.cnf"));
  ASSERT_EQ(cnf.clauses.size(), 2U);
  EXPECT_EQ(cnf.clauses[1][0].atom, Atom("p"));
  EXPECT_FALSE(cnf.clauses[1][0].positive);
  CnfInput anon = read_3cnf("p cnf 3 1\n1 -2 3 0\n");
  EXPECT_EQ(anon.clauses[0][1].atom, Atom("x2"));
  EXPECT_THROW((void)read_3cnf("p cnf 3 1\n1 2 0\n"), DimacsError);
  EXPECT_THROW((void)read_3cnf("p cnf 3 1\n1 2 3 -1 0\n"), DimacsError);
}

TEST(ExportAsp, RunningExampleGolden) {
  RuleSet rs = ground("ground_a_h.facts");
  std::string text = export_asp(rs);
  EXPECT_EQ(text, oracle::read_file(SLEECC_GOLDEN_DIR "/curtains.lp"));
  EXPECT_NE(text.find("o(curtains) :- a(user,curtains), not d(user), h(user)."), std::string::npos);
  EXPECT_NE(text.find("a(user,curtains).\nh(user).\n"), std::string::npos);
  EXPECT_EQ(names(replay_obligations(text, rs)), (std::set<std::string>{"o(curtains)"}));
}

TEST(ExportAsp, Deterministic) {
  RuleSet rs = ground("ground_a_h.facts");
  EXPECT_EQ(export_asp(rs), export_asp(ground("ground_a_h.facts")));
}

TEST(ExportAsp, Scaffold) {
  RuleSet rs = ground("ground_a_h.facts");
  std::string text = export_asp(rs, {false, true});
  EXPECT_NE(text.find("d(someoneelse).\n"), std::string::npos);
  EXPECT_EQ(text.find("h(someoneelse)"), std::string::npos);
  EXPECT_EQ(names(replay_obligations(text, rs)), (std::set<std::string>{"o(curtains)"}));
  RuleSet prop = oracle::curtains_with("a h");
  EXPECT_NE(export_asp(prop, {false, true}).find("#defined d/0."), std::string::npos);
  EXPECT_NE(export_prolog(prop, {false, true}).find(":- dynamic d/0."), std::string::npos);
}

TEST(ExportAsp, EmptyRuleSet) {
  EXPECT_EQ(export_asp(RuleSet{}), "");
  EXPECT_EQ(export_prolog(RuleSet{}), "");
}

TEST(ExportAsp, RejectsRicherRuleSets) {
  EXPECT_THROW((void)export_asp(parse_ruleset("sense a obligation o rule r: IF a or a THEN o.")), NotExportable);
  EXPECT_THROW((void)export_asp(parse_ruleset("sense a obligation o rule r: IF a THEN not o.")), NotExportable);
  EXPECT_THROW((void)export_asp(parse_ruleset("sense a obligation o rule r: IF o THEN o.")), NotExportable);
}

TEST(ExportProlog, RunningExampleGolden) {
  RuleSet rs = ground("ground_a_d.facts");
  std::string text = export_prolog(rs);
  EXPECT_EQ(text, oracle::read_file(SLEECC_GOLDEN_DIR "/curtains.pl"));
  EXPECT_NE(text.find("n(curtains) :- a(user,curtains), \\+ d(user), \\+ h(user)."), std::string::npos);
}

TEST(ExportProlog, Messages) {
  RuleSet rs = ground("ground_a_d.facts");
  std::string text = export_prolog(rs, {true, false});
  EXPECT_NE(text.find("n(curtains) :- a(user,curtains), \\+ d(user), \\+ h(user), "
                      "write(\"I have the obligation not to open curtains\"), nl."),
            std::string::npos);
  EXPECT_EQ(names(replay_obligations(text, rs)), (std::set<std::string>{"o(curtains)"}));
  // default text for obligations without a message
  EXPECT_NE(export_prolog(oracle::curtains_with("a"), {true, false}).find("write(\"I have the obligation n\")"),
            std::string::npos);
}

TEST(Replay, ThreeScenarios) {
  RuleSet decl = ground(nullptr);
  EXPECT_EQ(names(replay_obligations(export_prolog(ground("ground_a_d.facts")), decl)), (std::set<std::string>{"o(curtains)"}));
  EXPECT_EQ(names(replay_obligations(export_prolog(ground("ground_a.facts")), decl)),
            (std::set<std::string>{"n(curtains)", "s(user,curtains)"}));
  EXPECT_EQ(names(replay_obligations(export_asp(ground("ground_a_h.facts")), decl)), (std::set<std::string>{"o(curtains)"}));
}

TEST(Replay, ParsesBothDialects) {
  GroundProgram p = parse_program("% comment\nq :- a, \\+ b, not c, write(\"x. y\"), nl.\na.\n#defined b/0.\n:- dynamic c/0.\n");
  ASSERT_EQ(p.rules.size(), 1U);
  EXPECT_EQ(p.rules[0].body.size(), 3U);
  EXPECT_FALSE(p.rules[0].body[1].positive);
  EXPECT_FALSE(p.rules[0].body[2].positive);
  ASSERT_EQ(p.facts.size(), 1U);
  EXPECT_EQ(names(replay(p)), (std::set<std::string>{"a", "q"}));
  EXPECT_THROW((void)parse_program("a"), NotExportable);
}

TEST(ExportSoundness, ReplayMatchesDerivedObligations) {
  oracle::Rng rng(83);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    RuleSet rs = oracle::random_exportable_ruleset(rng, 4, 4, 4, 3);
    rs.facts = oracle::random_facts(rng, rs.sensed, 4);
    RuleSet closed = closed_world(rs);
    std::set<Atom> replayed = replay_obligations(export_asp(rs), rs);
    ASSERT_EQ(replayed, replay_obligations(export_prolog(rs, {true, true}), rs));
    if (check_consistency(closed).verdict == Verdict::Inconsistent) continue;
    std::set<Atom> expected;
    for (const auto& r : derive_obligations(closed))
      if (r.status == ObligationStatus::Obliged) expected.insert(r.atom);
    ASSERT_EQ(replayed, expected) << to_string(rs) << facts_to_string(rs.facts);
    ++checked;
  }
  EXPECT_GT(checked, 250);
}
