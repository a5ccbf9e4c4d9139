#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace sleecc;

namespace {

Formula v(const char* name) { return variable(Atom(name)); }

} // namespace

TEST(HornEligible, Examples) {
  EXPECT_TRUE(horn_eligible(
      parse_ruleset("sense p r obligation q s rule x: IF not p THEN q UNLESS not r IN WHICH CASE s.")));
  EXPECT_FALSE(horn_eligible(oracle::curtains()));
  EXPECT_TRUE(horn_eligible(RuleSet{}));
  // outcome must be an obligation, condition must be sensed
  EXPECT_FALSE(horn_eligible(parse_ruleset("sense p obligation q rule x: IF not p THEN not q.")));
  EXPECT_FALSE(horn_eligible(parse_ruleset("sense p obligation q rule x: IF not q THEN q.")));
  EXPECT_FALSE(horn_eligible(parse_ruleset("sense p obligation q rule x: IF not not p THEN q.")));
  // facts of either sign keep eligibility
  RuleSet rs = parse_ruleset("sense p r obligation q rule x: IF not p THEN q.");
  rs.facts = parse_facts("p not r", rs);
  EXPECT_TRUE(horn_eligible(rs));
}

TEST(HornEntails, ModusPonens) {
  RuleSet rs = parse_ruleset("sense d obligation n rule r: IF not d THEN n.");
  HornResult open = horn_entails(rs, Atom("n"));
  EXPECT_FALSE(open.entailed);
  ASSERT_TRUE(open.witness);
  EXPECT_TRUE(eval(compile_ruleset(rs), *open.witness));
  EXPECT_FALSE(open.witness->value(Atom("n")));

  rs.facts = parse_facts("not d", rs);
  EXPECT_TRUE(horn_entails(rs, Atom("n")).entailed);
}

TEST(HornEntails, RejectsIneligibleInput) {
  EXPECT_THROW((void)horn_entails(oracle::curtains(), Atom("o")), NotEligible);
  RuleSet rs = parse_ruleset("sense d obligation n rule r: IF not d THEN n.");
  EXPECT_THROW((void)horn_entails(rs, Atom("d")), NotEligible);
}

TEST(HornEncoding, ClauseShapes) {
  oracle::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    RuleSet rs = oracle::random_horn_ruleset(rng, 8, 5, 5, 3);
    HornEncoding enc = build_horn(rs, rs.obligations[0]);
    ASSERT_EQ(enc.dual.size(), enc.instance.clauses().size());
    for (const auto& d : enc.dual) {
      int negatives = 0;
      for (int l : d.literals) negatives += l < 0 ? 1 : 0;
      ASSERT_LE(negatives, 1);
    }
    for (std::size_t c = 0; c < enc.dual.size(); ++c) {
      const auto& h = enc.instance.clauses()[c];
      // flipped: negatives become the head, positives the body
      int positives = 0;
      for (int l : enc.dual[c].literals) positives += l > 0 ? 1 : 0;
      ASSERT_EQ(h.body.size(), static_cast<std::size_t>(positives));
      ASSERT_EQ(h.head.has_value(), positives != static_cast<int>(enc.dual[c].literals.size()));
    }
  }
}

TEST(HornEncoding, OriginsPointBack) {
  RuleSet rs = parse_ruleset("sense p r obligation q s rule x: IF not p THEN q UNLESS not r IN WHICH CASE s.");
  rs.facts = parse_facts("not p", rs);
  HornEncoding enc = build_horn(rs, Atom("q"));
  ASSERT_EQ(enc.instance.origin().size(), 4U);
  EXPECT_EQ(enc.instance.origin()[0].kind, ClauseOrigin::Kind::Rule);
  EXPECT_EQ(enc.instance.origin()[1].conjunct, 1U);
  EXPECT_EQ(enc.instance.origin()[2].kind, ClauseOrigin::Kind::Fact);
  EXPECT_EQ(enc.instance.origin()[3].kind, ClauseOrigin::Kind::Query);
}

TEST(HornInstance, RejectsNonDualHorn) {
  std::vector<DualHornClause> dual{{{-1, -2}, {ClauseOrigin::Kind::Fact, 0, 0, 0}}};
  EXPECT_THROW((void)HornInstance::from_dual(dual, 2), std::logic_error);
}

TEST(HornInstance, Propagation) {
  // 1, 1 -> 2, 2 -> 3, (3 -> false)
  std::vector<HornClause> clauses{{{}, 1}, {{1}, 2}, {{2}, 3}, {{3}, std::nullopt}};
  std::vector<ClauseOrigin> origin(4, ClauseOrigin{ClauseOrigin::Kind::Fact, 0, 0, 0});
  HornInstance unsat(clauses, origin, 3);
  EXPECT_FALSE(unsat.propagate().satisfiable);
  clauses.pop_back();
  origin.pop_back();
  HornInstance sat(clauses, origin, 3);
  auto out = sat.propagate();
  ASSERT_TRUE(out.satisfiable);
  EXPECT_EQ(out.minimal_model, (std::vector<bool>{false, true, true, true}));
  EXPECT_GT(out.steps, 0U);
}

// Obligations occur only positively in the fragment, so setting them all true
// always satisfies the rules.
TEST(HornConsistent, FragmentIsAlwaysConsistent) {
  RuleSet rs = parse_ruleset("sense p obligation q rule x: IF not p THEN q.");
  rs.facts = parse_facts("not p", rs);
  HornConsistency c = horn_consistent(rs);
  ASSERT_TRUE(c.consistent);
  EXPECT_TRUE(c.model->value(Atom("q")));
  EXPECT_EQ(check_consistency(rs).engine, Engine::Horn);
}

TEST(HornDifferential, AgreesWithSatEngine) {
  oracle::Rng rng(97);
  int entailed = 0, total = 0;
  for (int i = 0; i < 300; ++i) {
    RuleSet rs = oracle::random_horn_ruleset(rng, 1 + oracle::pick(rng, 15), 1 + oracle::pick(rng, 10), 5, 3);
    for (const auto& o : rs.obligations) {
      QueryResult h = entails(rs, variable(o), Engine::Horn);
      QueryResult s = entails(rs, variable(o), Engine::Sat);
      ASSERT_EQ(h.verdict, s.verdict) << to_string(rs) << facts_to_string(rs.facts);
      ++total;
      entailed += h.verdict == Verdict::Entailed ? 1 : 0;
    }
    ASSERT_EQ(check_consistency(rs, Engine::Horn).verdict, check_consistency(rs, Engine::Sat).verdict);
  }
  EXPECT_GT(entailed, 0);
  EXPECT_LT(entailed, total);
}

TEST(HornChain, EntailedWithLinearSteps) {
  std::vector<double> per_rule;
  for (std::size_t k : {250U, 500U, 1000U, 2000U}) {
    RuleSet rs = oracle::chain(k);
    ASSERT_TRUE(horn_eligible(rs));
    HornResult r = horn_entails(rs, Atom("q"));
    ASSERT_TRUE(r.entailed);
    per_rule.push_back(static_cast<double>(r.steps) / static_cast<double>(k));
  }
  for (double x : per_rule) EXPECT_LE(x / per_rule.front(), 1.3);
  EXPECT_FALSE(horn_entails(oracle::chain(50), Atom("r3")).entailed);
}

TEST(HornChain, SmallChainMatchesSat) {
  RuleSet rs = oracle::chain(4);
  for (const auto& o : rs.obligations)
    EXPECT_EQ(entails(rs, variable(o), Engine::Horn).verdict, entails(rs, variable(o), Engine::Sat).verdict);
  EXPECT_EQ(entails(rs, v("q")).verdict, Verdict::Entailed);
}
