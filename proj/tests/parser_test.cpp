#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace sleecc;

namespace {

Formula v(const char* name) { return variable(Atom(name)); }

} // namespace

TEST(ParseFormula, Operators) {
  EXPECT_EQ(parse_formula("a or b and c"), disjoin(v("a"), conjoin(v("b"), v("c"))));
  EXPECT_EQ(parse_formula("a -> b -> c"), implies(v("a"), implies(v("b"), v("c"))));
  EXPECT_EQ(parse_formula("a and b and c"), conjoin(v("a"), conjoin(v("b"), v("c"))));
  EXPECT_EQ(parse_formula("not not d"), negate(negate(v("d"))));
  EXPECT_EQ(parse_formula("NOT a OR True"), disjoin(negate(v("a")), truth()));
  EXPECT_EQ(parse_formula("(a -> b) -> c"), implies(implies(v("a"), v("b")), v("c")));
  EXPECT_EQ(parse_formula("s(user, curtains)"), variable(Atom("s", {"user", "curtains"})));
}

TEST(ParseFormula, Errors) {
  EXPECT_THROW((void)parse_formula("a and"), SyntaxError);
  EXPECT_THROW((void)parse_formula("(a"), SyntaxError);
  EXPECT_THROW((void)parse_formula("a b"), SyntaxError);
  EXPECT_THROW((void)parse_formula("A"), SyntaxError);
  EXPECT_THROW((void)parse_formula("a & b"), SyntaxError);
  EXPECT_THROW((void)parse_formula("__true"), SyntaxError);
}

TEST(ParseRuleset, RunningExample) {
  RuleSet rs = parse_ruleset(
      "sense a d h  obligation o n s  rule r1: IF a THEN o UNLESS not d IN WHICH CASE n and s "
      "UNLESS h IN WHICH CASE o.");
  ASSERT_EQ(rs.rules.size(), 1U);
  const SleecRule& r = rs.rules[0];
  EXPECT_EQ(r.name(), std::optional<std::string>("r1"));
  ASSERT_EQ(r.conditions().size(), 3U);
  EXPECT_EQ(r.conditions()[0], v("a"));
  EXPECT_EQ(r.conditions()[1], negate(v("d")));
  EXPECT_EQ(r.conditions()[2], v("h"));
  EXPECT_EQ(r.outcomes()[0], v("o"));
  EXPECT_EQ(r.outcomes()[1], conjoin(v("n"), v("s")));
  EXPECT_EQ(r.outcomes()[2], v("o"));
  EXPECT_EQ(r.unless_count(), 2U);
  EXPECT_EQ(rs.sensed.size(), 3U);
  EXPECT_EQ(rs.obligations.size(), 3U);
}

TEST(ParseRuleset, DegenerateRule) {
  RuleSet rs = parse_ruleset("sense c  obligation o  rule r: IF c THEN o.");
  ASSERT_EQ(rs.rules.size(), 1U);
  EXPECT_EQ(rs.rules[0].unless_count(), 0U);
  EXPECT_EQ(rs.rules[0].conditions()[0], v("c"));
  EXPECT_EQ(rs.rules[0].outcomes()[0], v("o"));
}

TEST(ParseRuleset, MissingOutcomeReportsPosition) {
  try {
    (void)parse_ruleset("sense a d\nobligation o\nrule r: IF a THEN UNLESS d.");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.column(), 19U);
    EXPECT_EQ(e.expected(), "formula");
  }
}

TEST(ParseRuleset, KeywordsAreCaseInsensitiveAndCommentsIgnored) {
  RuleSet a = parse_ruleset("SENSE a # sensed\nObligation o\nRule r: if a then o unless not a in which case o.");
  RuleSet b = parse_ruleset("sense a\nobligation o\nrule r: IF a THEN o UNLESS not a IN WHICH CASE o.");
  EXPECT_EQ(a, b);
}

TEST(ParseRuleset, OptionalNameAndComma) {
  RuleSet rs = parse_ruleset("sense a b obligation o rule IF a THEN o, UNLESS b IN WHICH CASE o.");
  ASSERT_EQ(rs.rules.size(), 1U);
  EXPECT_FALSE(rs.rules[0].name().has_value());
}

TEST(ParseRuleset, AtomsAreCaseSensitive) {
  EXPECT_THROW((void)parse_ruleset("sense a obligation o rule r: IF aB THEN o."), UndeclaredAtom);
}

TEST(ParseRuleset, UndeclaredAtom) {
  try {
    (void)parse_ruleset("sense a\nobligation o\nrule r: IF a THEN z.");
    FAIL();
  } catch (const UndeclaredAtom& e) {
    EXPECT_EQ(e.name(), "z");
  }
}

TEST(ParseRuleset, DuplicateDeclaration) {
  EXPECT_THROW((void)parse_ruleset("sense a a"), DuplicateDeclaration);
  EXPECT_THROW((void)parse_ruleset("sense a obligation a"), DuplicateDeclaration);
}

TEST(ParseRuleset, ZeroRulesIsLegal) {
  RuleSet rs = parse_ruleset("sense a obligation o");
  EXPECT_TRUE(rs.rules.empty());
  EXPECT_TRUE(parse_ruleset("").rules.empty());
}

TEST(ParseRuleset, GroundAtomsAndMessages) {
  RuleSet rs = parse_ruleset(oracle::read_file(SLEECC_DATA_DIR "/curtains_ground.sleec"));
  ASSERT_EQ(rs.sensed.size(), 3U);
  EXPECT_EQ(rs.sensed[0], Atom("a", {"user", "curtains"}));
  EXPECT_EQ(rs.messages.at(Atom("n", {"curtains"})), "I have the obligation not to open curtains");
}

TEST(ParseRuleset, MessageMustNameAnObligation) {
  EXPECT_THROW((void)parse_ruleset("sense a obligation o message a \"x\""), Error);
}

TEST(ParseRuleset, WindowsLineEndingsAndBom) {
  RuleSet a = parse_ruleset("\xEF\xBB\xBFsense a\r\nobligation o\r\nrule r: IF a THEN o.\r\n");
  RuleSet b = parse_ruleset("sense a\nobligation o\nrule r: IF a THEN o.\n");
  EXPECT_EQ(a, b);
}

TEST(ParseFacts, Examples) {
  RuleSet rs = oracle::curtains();
  auto f = parse_facts("a  d  h", rs);
  ASSERT_EQ(f.size(), 3U);
  for (const auto& l : f) EXPECT_TRUE(l.positive);
  auto g = parse_facts("a\nnot d\nnot h\n", rs);
  ASSERT_EQ(g.size(), 3U);
  EXPECT_TRUE(g[0].positive);
  EXPECT_FALSE(g[1].positive);
  EXPECT_EQ(g[1].atom, Atom("d"));
  EXPECT_FALSE(g[2].positive);
}

TEST(ParseFacts, Errors) {
  RuleSet rs = oracle::curtains();
  try {
    (void)parse_facts("o", rs);
    FAIL();
  } catch (const NotSensed& e) {
    EXPECT_EQ(e.name(), "o");
  }
  EXPECT_THROW((void)parse_facts("z", rs), UndeclaredAtom);
  EXPECT_THROW((void)parse_facts("a not a", rs), ContradictoryFacts);
  EXPECT_THROW((void)parse_facts("a and d", rs), SyntaxError);
  EXPECT_EQ(parse_facts("a a # twice", rs).size(), 1U);
}

TEST(RoundTrip, RunningExamplePrintsCanonically) {
  RuleSet rs = oracle::curtains();
  std::string text = to_string(rs);
  EXPECT_EQ(text,
            "sense a d h\n"
            "obligation o n s\n"
            "rule curtains: IF a THEN o UNLESS not d IN WHICH CASE n and s UNLESS h IN WHICH CASE o.\n");
  EXPECT_EQ(parse_ruleset(text), rs);
}

TEST(RoundTrip, RandomRuleSets) {
  oracle::Rng rng(55);
  for (int i = 0; i < 300; ++i) {
    RuleSet rs;
    rs.sensed = oracle::make_atoms("s", 4);
    rs.obligations = oracle::make_atoms("o", 3);
    auto pool = rs.declared();
    const std::size_t rules = oracle::pick(rng, 4);
    for (std::size_t r = 0; r < rules; ++r) rs.rules.push_back(oracle::random_rule(rng, pool, 3, 3));
    if (oracle::coin(rng)) rs.messages[rs.obligations[0]] = "say \"hi\" \\ now";
    std::string text = to_string(rs);
    RuleSet back = parse_ruleset(text);
    ASSERT_EQ(back, rs) << text;
    ASSERT_EQ(to_string(back), text);
  }
}

TEST(RuleSet, ValidateCatchesHandBuiltMistakes) {
  RuleSet rs = oracle::curtains();
  EXPECT_NO_THROW(rs.validate());
  rs.facts.push_back(Literal{Atom("o"), true});
  EXPECT_THROW(rs.validate(), NotSensed);
  rs.facts = {Literal{Atom("a"), true}, Literal{Atom("a"), false}};
  EXPECT_THROW(rs.validate(), ContradictoryFacts);
}

TEST(SleecRule, RequiresMatchingLengths) {
  EXPECT_THROW(SleecRule({v("a")}, {}), std::invalid_argument);
  EXPECT_THROW(SleecRule({}, {}), std::invalid_argument);
}
