#include <gtest/gtest.h>

#include <random>

#include "setshare/amgu.hpp"
#include "setshare/concrete.hpp"
#include "setshare/error.hpp"
#include "setshare/harness.hpp"
#include "support.hpp"
#include "test_oracles.hpp"

namespace setshare {
namespace {

using test::equation;
using test::gs;
using test::term;
using test::triple;
using test::universe;
using test::vs;

struct Fixture {
  VariableUniverse x;
  SharingTriple t;
  Term s;
  Term rhs;
};

Fixture independence_example() {
  const auto x = universe("uvwxyz");
  return {x, triple(x, {"", "uw", "vw", "xy", "xz", "wx"}, "", "uvwxyz"), term(x, "w"), term(x, "x")};
}

Fixture closure_example() {
  const auto x = universe("wxyz");
  return {x, triple(x, {"", "wx", "wy", "wz"}, "", "wxyz"), term(x, "w"), term(x, "f(z,x,y)")};
}

Fixture redundancy_example() {
  const auto x = universe("xyz");
  return {x, triple(x, {"", "xy", "yz"}, "y", "y"), term(x, "x"), term(x, "z")};
}

Fixture decomposition_example() {
  const auto x = universe("xyz");
  return {x, triple(x, {"", "x", "z", "xy", "yz"}, "xyz", "xyz"), term(x, "x"), term(x, "z")};
}

Fixture hidden_groundness_example() {
  const auto x = universe("xyz");
  return {x, triple(x, {"", "xy", "y", "z"}, "xy", "xy"), term(x, "x"), term(x, "f(y,z)")};
}

TEST(Amgu1, LinearityWithoutIndependenceCheck) {
  const Fixture f = independence_example();
  const SharingTriple r = amgu1(f.t, f.s, f.rhs);
  EXPECT_EQ(r.sharing(), gs(f.x, {"", "uwx", "uwxy", "uwxz", "vwx", "vwxy", "vwxz", "wx", "wxy", "wxz"}));
  EXPECT_EQ(r.free(), VarSet{});
  for (VarSet g : r.sharing()) {
    EXPECT_FALSE(vs(f.x, "uv").subset_of(g));
    EXPECT_FALSE(vs(f.x, "yz").subset_of(g));
  }
}

// The linearity clause removes only var(S_s) ∩ var(S_t) = {w,x}.
TEST(Amgu1, LinearityComponentFollowsDefinitionOverPrintedEmptySet) {
  const Fixture f = independence_example();
  EXPECT_EQ(amgu1(f.t, f.s, f.rhs).linear(), vs(f.x, "uvyz"));
  const auto naive = oracle::amgu(1, oracle::names(f.x.all(), f.x), oracle::naive(f.t), f.s, f.rhs);
  EXPECT_EQ(naive.l, oracle::names(vs(f.x, "uvyz"), f.x));
}

TEST(Amgu1, ClosureIsNeededForLinearTerms) {
  const Fixture f = closure_example();
  AmguTrace trace;
  const SharingTriple r = amgu1(f.t, f.s, f.rhs, false, &trace);
  EXPECT_EQ(trace.combined, gs(f.x, {"wx", "wy", "wz", "wxy", "wxz", "wyz", "wxyz"}));
  EXPECT_EQ(trace.chi_lhs, Multiplicity::kLinear);
  EXPECT_EQ(trace.chi_rhs, Multiplicity::kLinear);
  const EquationSet e{equation(f.x, "w", "f(x,y,z)"), equation(f.x, "w", "f(z,x,y)")};
  EXPECT_TRUE(in_gamma_sfl(e, r));
}

TEST(Amgu1, SelfUnificationOfFreeVariable) {
  const auto x = universe("x");
  const SharingTriple t = triple(x, {"", "x"}, "x", "x");
  EXPECT_EQ(amgu1(t, term(x, "x"), term(x, "x")), t);
}

TEST(Amgu2, FreenessAbsorbedIntoGuardedOperators) {
  const Fixture f = redundancy_example();
  EXPECT_EQ(amgu1(f.t, f.s, f.rhs), triple(f.x, {"", "xyz"}, "", ""));
  EXPECT_EQ(amgu2(f.t, f.s, f.rhs), triple(f.x, {""}, "", "xyz"));
}

TEST(Amgu2, LessPreciseThanDecomposition) {
  const Fixture f = decomposition_example();
  const SharingTriple r2 = amgu2(f.t, f.s, f.rhs);
  EXPECT_EQ(r2, triple(f.x, {"", "xz", "xyz"}, "xyz", "xyz"));
  const std::vector<GroupSet> blocks = file_decomposition(f.t.sharing(), f.t.free());
  const std::set<std::string> expected = {"{x} {y,z}", "{} {x} {y,z}", "{z} {x,y}", "{} {z} {x,y}"};
  std::set<std::string> got;
  for (const GroupSet& b : blocks) got.insert(format_groups(b, f.x));
  EXPECT_EQ(got, expected);
  const SharingTriple rf = file_reference(f.t, f.s, f.rhs);
  EXPECT_EQ(rf.sharing(), gs(f.x, {"", "xyz"}));
  EXPECT_TRUE(rf.sharing().subset_of(r2.sharing()));
  EXPECT_NE(rf.sharing(), r2.sharing());
}

TEST(Amgu3, HiddenGroundnessBeatsDecomposition) {
  const Fixture f = hidden_groundness_example();
  EXPECT_EQ(amgu3(f.t, f.s, f.rhs), triple(f.x, {"", "xyz"}, "", ""));
  EXPECT_EQ(amgu2(f.t, f.s, f.rhs), triple(f.x, {"", "xy", "xyz"}, "", ""));
  EXPECT_EQ(file_reference(f.t, f.s, f.rhs).sharing(), gs(f.x, {"", "xy", "xyz"}));
}

// Both sides are variables, so amgu3 falls back to amgu2. On these inputs
// the guarded operators refuse to join {x,y} with {y,z}, which is what the
// decomposition computes too.
TEST(Amgu3, VariablePairFallsBackToAmgu2) {
  const Fixture f = redundancy_example();
  const SharingTriple r3 = amgu3(f.t, f.s, f.rhs);
  EXPECT_EQ(r3, amgu2(f.t, f.s, f.rhs));
  EXPECT_EQ(r3, triple(f.x, {""}, "", "xyz"));
  EXPECT_EQ(file_reference(f.t, f.s, f.rhs), triple(f.x, {""}, "", "xyz"));
}

TEST(Amgu3, FreeVariableBoundToConstantIsGround) {
  const auto x = universe("xyz");
  const SharingTriple t = triple(x, {"", "x", "y", "z"}, "xy", "xy");
  const SharingTriple r = amgu3(t, term(x, "x"), term(x, "a()"));
  // Y = ∅ gives x <-> true: every surviving group excludes x.
  EXPECT_EQ(r.sharing(), gs(x, {"", "y", "z"}));
  EXPECT_EQ(r.free(), vs(x, "y"));
  EXPECT_EQ(r.linear(), vs(x, "xy"));
  EXPECT_TRUE(in_gamma_sfl({equation(x, "x", "a()")}, r));
  EXPECT_EQ(amgu3(t, term(x, "a()"), term(x, "x")).sharing(), gs(x, {"", "y", "z"}));
  // A free variable bound to a compound is ground exactly when the term is.
  const SharingTriple c = amgu3(t, term(x, "x"), term(x, "f(y,a())"));
  EXPECT_EQ(c.sharing(), gs(x, {"", "z", "xy"}));
  EXPECT_TRUE(in_gamma_sfl({equation(x, "x", "f(y,a())")}, c));
}

TEST(Amgu, RejectsVariablesOutsideUniverse) {
  const auto x = universe("xy");
  const SharingTriple t = triple(x, {"", "x"}, "", "");
  const Term w = Term::variable("w");
  EXPECT_THROW(amgu1(t, w, term(x, "x")), PreconditionError);
  EXPECT_THROW(amgu2(t, term(x, "x"), w), PreconditionError);
  EXPECT_THROW(amgu3(t, w, term(x, "y")), PreconditionError);
  EXPECT_THROW(file_reference(t, w, term(x, "y")), PreconditionError);
}

TEST(Amgu, DefinitionsAgreeWithLiteralEvaluation) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> names = {"v", "w", "x", "y", "z"};
  const VariableUniverse x(names);
  const auto all = oracle::names(x.all(), x);
  for (int round = 0; round < 1500; ++round) {
    std::vector<VarSet> groups;
    for (std::size_t i = 0, n = rng() % 6; i < n; ++i) groups.push_back(VarSet::from_bits(rng() & x.all().bits()));
    const VarSet free = VarSet::from_bits(rng() & rng() & x.all().bits());
    const VarSet linear = VarSet::from_bits(rng() & x.all().bits());
    const SharingTriple t(x, GroupSet(groups), free, linear);
    const Term s = (rng() % 2) ? Term::variable(names[rng() % names.size()]) : random_term(rng, names, 2);
    const Term u = random_term(rng, names, 2);
    const auto in = oracle::naive(t);
    EXPECT_EQ(oracle::naive(amgu1(t, s, u)), oracle::amgu(1, all, in, s, u)) << to_string(s) << " = " << to_string(u);
    EXPECT_EQ(oracle::naive(amgu2(t, s, u)), oracle::amgu(2, all, in, s, u)) << to_string(s) << " = " << to_string(u);
    EXPECT_EQ(oracle::naive(amgu3(t, s, u)), oracle::amgu(3, all, in, s, u)) << to_string(s) << " = " << to_string(u);
  }
}

TEST(Amgu, TradeEfficiencyIsCoarserButEqualWhenIndependent) {
  const Fixture f = closure_example();
  const SharingTriple exact = amgu1(f.t, f.s, f.rhs);
  const SharingTriple traded = amgu1(f.t, f.s, f.rhs, true);
  EXPECT_TRUE(exact.sharing().subset_of(traded.sharing()));
  // Independent linear sides: a single pairwise union, identical to the default.
  const auto x = universe("xyz");
  const SharingTriple t = triple(x, {"", "x", "y", "z"}, "", "xyz");
  AmguTrace trace;
  const SharingTriple r = amgu1(t, term(x, "x"), term(x, "f(y)"), false, &trace);
  EXPECT_EQ(trace.combined, pairwise_union(trace.relevant_lhs, trace.relevant_rhs));
  EXPECT_EQ(amgu1(t, term(x, "x"), term(x, "f(y)"), true), r);
}

TEST(FileReference, SingleBlockEqualsAmgu1) {
  const auto x = universe("xyz");
  // Groups already F-disjoint and covering F: the only blocks are S with and without ∅.
  const SharingTriple t = triple(x, {"", "x", "yz"}, "xyz", "xyz");
  ASSERT_EQ(file_decomposition(t.sharing(), t.free()).size(), 2U);
  EXPECT_EQ(file_reference(t, term(x, "x"), term(x, "f(z)")), amgu1(t, term(x, "x"), term(x, "f(z)")));
}

TEST(FileReference, EmptyDecompositionAndBound) {
  const auto x = universe("xy");
  // y is free but no group covers it, so no block exists.
  const SharingTriple t = triple(x, {"", "x"}, "y", "y");
  EXPECT_EQ(file_reference(t, term(x, "x"), term(x, "y")), SharingTriple(x, GroupSet{}, x.all(), x.all()));
  EXPECT_THROW(file_reference(triple(x, {"", "x", "y", "xy"}, "", ""), term(x, "x"), term(x, "y"), 3), LimitError);
}

TEST(AmguSet, ScheduleAndFold) {
  const auto x = universe("xyz");
  const EquationSet e{equation(x, "x", "y"), equation(x, "z", "a()"), equation(x, "f(y)", "x"),
                      equation(x, "g(a(),a())", "g(a(),a())")};
  const EquationSet ordered = schedule(e, EquationOrder::kGroundFirst);
  ASSERT_EQ(ordered.size(), 4U);
  EXPECT_EQ(ordered[0], e[1]);
  EXPECT_EQ(ordered[1], e[3]);
  EXPECT_EQ(ordered[2], e[0]);
  EXPECT_EQ(ordered[3], e[2]);
  EXPECT_EQ(schedule(e, EquationOrder::kGiven), e);

  const SharingTriple t = triple(x, {"", "x", "y", "z"}, "xyz", "xyz");
  AmguConfig config;
  EXPECT_EQ(amgu_set(t, {}, config), t);
  EXPECT_EQ(amgu_set(t, {e[0]}, config), amgu3(t, e[0].lhs, e[0].rhs));
  // A ground identity leaves the triple alone.
  EXPECT_EQ(amgu_set(t, {e[3]}, config), t);
}

TEST(EarlyPrune, GroundnessOfPendingEquations) {
  const auto x = universe("uvxy");
  const SharingTriple t = triple(x, {"", "x", "y", "u", "v"}, "", "");
  const PosFormula f = make_formula(parse_formula("x | y"), x);
  const EquationSet e{equation(x, "x", "f(u,v)"), equation(x, "x", "y")};
  PosFormula f_prime = f;
  for (const Equation& eq : e) f_prime = conj(f_prime, abstract_equation(eq, x));
  EXPECT_EQ(f_prime, PosFormula::conjunction_of(x, x.all()));
  EXPECT_EQ(entailed_ground(f_prime), x.all());
  EXPECT_EQ(early_prune(f, e, t), SharingTriple(x, GroupSet{}, VarSet{}, x.all()));

  // f = true and no grounding: unchanged.
  EXPECT_EQ(early_prune(PosFormula(x), {equation(x, "x", "y")}, t), t);
  // Everything ground.
  EXPECT_EQ(early_prune(PosFormula::conjunction_of(x, x.all()), {}, triple(x, {"", "xy"}, "x", "x")),
            SharingTriple(x, GroupSet{}, VarSet{}, x.all()));
  EXPECT_THROW(early_prune(PosFormula(universe("ab")), {}, t), PreconditionError);
}

TEST(EarlyPrune, FreeVariablesTouchingGroundGroupsAreDropped) {
  const auto x = universe("xyz");
  const SharingTriple t = triple(x, {"", "xy", "z"}, "yz", "yz");
  const SharingTriple r = early_prune(PosFormula(x), {equation(x, "x", "a()")}, t);
  EXPECT_EQ(r.sharing(), gs(x, {"", "z"}));
  EXPECT_EQ(r.free(), vs(x, "z"));
  EXPECT_EQ(r.linear(), x.all());
}

TEST(Analyze, PipelineWithAndWithoutPruning) {
  const auto problem = parse_problem(
      "vars u v x y\nsharing {x} {y} {u} {v}\npos x | y\neq x = f(u,v)\neq x = y\n");
  const AnalysisResult r = analyze(problem, AmguConfig{});
  ASSERT_TRUE(r.pruned.has_value());
  EXPECT_EQ(r.pruned->sharing(), GroupSet{VarSet{}});
  EXPECT_EQ(r.result.sharing(), GroupSet{VarSet{}});

  AmguConfig off;
  off.early_prune = false;
  const AnalysisResult plain = analyze(problem, off);
  EXPECT_FALSE(plain.pruned.has_value());
  EXPECT_EQ(plain.result, amgu_set(problem.initial, problem.equations, off));

  const auto empty = parse_problem("vars x y\nsharing {x,y}\nfree x\n");
  EXPECT_EQ(analyze(empty, off).result, empty.initial);
}

TEST(Analyze, AlgorithmNames) {
  for (Algorithm a : {Algorithm::kAmgu1, Algorithm::kAmgu2, Algorithm::kAmgu3, Algorithm::kFileReference}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  EXPECT_EQ(parse_algorithm("1"), Algorithm::kAmgu1);
  EXPECT_EQ(parse_algorithm("file"), Algorithm::kFileReference);
  EXPECT_FALSE(parse_algorithm("4").has_value());
}

}  // namespace
}  // namespace setshare
