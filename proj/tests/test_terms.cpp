#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "setshare/error.hpp"
#include "setshare/terms.hpp"
#include "setshare/universe.hpp"
#include "support.hpp"

namespace setshare {
namespace {

using test::universe;
using test::vs;

TEST(VarSet, SetAlgebra) {
  const VarSet a = VarSet::from_bits(0b0110);
  const VarSet b = VarSet::from_bits(0b0011);
  EXPECT_EQ((a | b).bits(), 0b0111U);
  EXPECT_EQ((a & b).bits(), 0b0010U);
  EXPECT_EQ((a - b).bits(), 0b0100U);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(VarSet::singleton(3).intersects(b));
  EXPECT_TRUE(VarSet::from_bits(0b0010).subset_of(a));
  EXPECT_EQ(a.size(), 2U);
  EXPECT_EQ(VarSet::first_n(64).size(), 64U);
  std::vector<std::size_t> members(a.begin(), a.end());
  EXPECT_EQ(members, (std::vector<std::size_t>{1, 2}));
}

TEST(VarSet, CanonicalOrderIsSizeThenDeclarationOrder) {
  const auto x = universe("xyz");
  std::vector<VarSet> groups = {vs(x, "yz"), vs(x, "xyz"), vs(x, "z"), vs(x, ""), vs(x, "xz"), vs(x, "x"),
                                vs(x, "xy")};
  std::sort(groups.begin(), groups.end(), CanonicalLess{});
  std::vector<std::string> printed;
  for (VarSet g : groups) printed.push_back(x.format_group(g));
  EXPECT_EQ(printed, (std::vector<std::string>{"{}", "{x}", "{z}", "{x,y}", "{x,z}", "{y,z}", "{x,y,z}"}));
}

TEST(VariableUniverse, LooksUpNamesByDeclarationIndex) {
  const VariableUniverse x({"b", "a", "c"});
  EXPECT_EQ(x.size(), 3U);
  EXPECT_EQ(*x.index_of("a"), 1U);
  EXPECT_FALSE(x.index_of("d").has_value());
  EXPECT_THROW(x.require("d"), PreconditionError);
  EXPECT_EQ(x.format_list(x.all()), "b a c");
  EXPECT_EQ(x.format_group(x.set_of({"c", "b"})), "{b,c}");
  EXPECT_EQ(x, VariableUniverse({"b", "a", "c"}));
  EXPECT_FALSE(x == VariableUniverse({"a", "b", "c"}));
}

TEST(VariableUniverse, RejectsBadDeclarations) {
  EXPECT_EQ(VariableUniverse(std::vector<std::string>{}).size(), 0U);
  EXPECT_THROW(VariableUniverse({"x", "x"}), SemanticError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(VariableUniverse{many}, LimitError);
  many.pop_back();
  EXPECT_EQ(VariableUniverse(many).all().size(), 64U);
}

TEST(Term, VariablesAndPrinting) {
  const Term t = Term::compound("f", {Term::variable("x"), Term::constant("a"),
                                      Term::compound("g", {Term::variable("y"), Term::variable("x")})});
  EXPECT_EQ(vars(t), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(to_string(t), "f(x,a(),g(y,x))");
  EXPECT_EQ(t.arity(), 3U);
  EXPECT_FALSE(t.is_variable());
  std::ostringstream os;
  os << Equation{Term::variable("x"), t};
  EXPECT_EQ(os.str(), "x = f(x,a(),g(y,x))");
  EXPECT_EQ(vars(EquationSet{{Term::variable("z"), Term::constant("a")}, {t, t}}),
            (std::set<std::string>{"x", "y", "z"}));
}

TEST(Term, SyntacticMultiplicity) {
  const Term a = Term::constant("a");
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  EXPECT_EQ(chi_syntactic(a), Multiplicity::kGround);
  EXPECT_EQ(chi_syntactic(Term::compound("f", {a, a})), Multiplicity::kGround);
  EXPECT_EQ(chi_syntactic(x), Multiplicity::kLinear);
  EXPECT_EQ(chi_syntactic(Term::compound("f", {x, y})), Multiplicity::kLinear);
  EXPECT_EQ(chi_syntactic(Term::compound("f", {x, Term::compound("g", {x})})), Multiplicity::kNonLinear);
}

TEST(Term, OccurrencesAndMembership) {
  const auto x = universe("xyz");
  const Term t = test::term(x, "f(x,g(y,x),a())");
  const Occurrences occ = occurrences(t, x);
  EXPECT_EQ(occ.any, vs(x, "xy"));
  EXPECT_EQ(occ.repeated, vs(x, "x"));
  EXPECT_EQ(var_set(t, x), vs(x, "xy"));
  EXPECT_TRUE(is_variable_in(Term::variable("x"), vs(x, "x"), x));
  EXPECT_FALSE(is_variable_in(Term::variable("y"), vs(x, "x"), x));
  EXPECT_FALSE(is_variable_in(t, x.all(), x));
  EXPECT_THROW(var_set(Term::variable("w"), x), PreconditionError);
  EXPECT_THROW(occurrences(Term::variable("w"), x), PreconditionError);
}

}  // namespace
}  // namespace setshare
