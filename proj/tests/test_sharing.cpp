#include <gtest/gtest.h>

#include <random>

#include "setshare/error.hpp"
#include "setshare/sharing.hpp"
#include "support.hpp"
#include "test_oracles.hpp"

namespace setshare {
namespace {

using test::gs;
using test::universe;
using test::vs;

GroupSet random_groups(std::mt19937_64& rng, const VariableUniverse& x, std::size_t max_groups) {
  std::vector<VarSet> groups;
  const std::size_t n = rng() % (max_groups + 1);
  for (std::size_t i = 0; i < n; ++i) groups.push_back(VarSet::from_bits(rng() & x.all().bits()));
  return GroupSet(groups);
}

TEST(GroupSet, CanonicalAndDuplicateFree) {
  const auto x = universe("xyz");
  const GroupSet s = gs(x, {"yz", "x", "yz", "", "xy"});
  EXPECT_EQ(s.size(), 4U);
  EXPECT_EQ(format_groups(s, x), "{} {x} {x,y} {y,z}");
  EXPECT_EQ(s.vars(), x.all());
  EXPECT_TRUE(gs(x, {"x"}).subset_of(s));
  EXPECT_EQ(set_union(gs(x, {"x"}), gs(x, {"y"})), gs(x, {"x", "y"}));
  EXPECT_EQ(set_intersection(s, gs(x, {"x", "z"})), gs(x, {"x"}));
  EXPECT_EQ(set_difference(s, gs(x, {"x", "z"})), gs(x, {"", "xy", "yz"}));
  GroupSet t = s;
  EXPECT_TRUE(t.erase(vs(x, "x")));
  EXPECT_FALSE(t.erase(vs(x, "x")));
  t.insert(vs(x, "z"));
  EXPECT_EQ(format_groups(t, x), "{} {z} {x,y} {y,z}");
}

TEST(SharingTriple, NormalisesEmptyGroupAndFreeLinear) {
  const auto x = universe("xyz");
  const SharingTriple t(x, gs(x, {"xy"}), vs(x, "y"), VarSet{});
  EXPECT_TRUE(t.sharing().contains(VarSet{}));
  EXPECT_EQ(t.linear(), vs(x, "y"));
  EXPECT_THROW(SharingTriple(x, GroupSet{VarSet::singleton(3)}, VarSet{}, VarSet{}), PreconditionError);
  EXPECT_THROW(SharingTriple(x, GroupSet{}, VarSet::singleton(4), VarSet{}), PreconditionError);
}

TEST(Sharing, Relevance) {
  const auto x = universe("uvwxyz");
  const GroupSet s = gs(x, {"", "uw", "vw", "xy", "xz", "wx"});
  EXPECT_EQ(rel(test::term(x, "w"), s, x), gs(x, {"uw", "vw", "wx"}));
  EXPECT_EQ(rel(test::term(x, "f(y,z)"), s, x), gs(x, {"xy", "xz"}));
  EXPECT_EQ(rel(test::term(x, "a()"), s, x), GroupSet{});
  EXPECT_EQ(rel(vs(x, "u"), s), gs(x, {"uw"}));
}

TEST(Sharing, ClosureAndPairwiseUnionSmall) {
  const auto x = universe("xyz");
  EXPECT_EQ(closure_star(gs(x, {"x", "y", "z"})), gs(x, {"x", "y", "z", "xy", "xz", "yz", "xyz"}));
  EXPECT_EQ(closure_star(GroupSet{}), GroupSet{});
  EXPECT_EQ(pairwise_union(gs(x, {"x", "y"}), gs(x, {"z"})), gs(x, {"xz", "yz"}));
  EXPECT_EQ(pairwise_union(gs(x, {"x"}), GroupSet{}), GroupSet{});
  // Distinct groups sharing the free y are not joined; equal groups are.
  EXPECT_EQ(uplus_f(gs(x, {"xy"}), gs(x, {"yz"}), vs(x, "y")), GroupSet{});
  EXPECT_EQ(uplus_f(gs(x, {"xy"}), gs(x, {"xy", "z"}), vs(x, "y")), gs(x, {"xy", "xyz"}));
  EXPECT_EQ(star_f(gs(x, {"xy", "yz", "z"}), vs(x, "y")), gs(x, {"z", "xy", "yz", "xyz"}));
}

TEST(Sharing, OperatorsAgreeWithPairwiseFixpoint) {
  std::mt19937_64 rng(11);
  const auto x = universe("uvwxyz");
  for (int round = 0; round < 400; ++round) {
    const GroupSet a = random_groups(rng, x, 5);
    const GroupSet b = random_groups(rng, x, 5);
    const VarSet free = VarSet::from_bits(rng() & x.all().bits());
    const auto na = oracle::naive(a, x);
    const auto nb = oracle::naive(b, x);
    const auto nf = oracle::names(free, x);
    EXPECT_EQ(oracle::naive(closure_star(a), x), oracle::closure(na));
    EXPECT_EQ(oracle::naive(pairwise_union(a, b), x), oracle::uplus(na, nb));
    EXPECT_EQ(oracle::naive(uplus_f(a, b, free), x), oracle::uplus_f(na, nb, nf));
    EXPECT_EQ(oracle::naive(star_f(a, free), x), oracle::star_f(na, nf));
  }
}

TEST(Sharing, AbstractMultiplicity) {
  const auto x = universe("xyz");
  const GroupSet s = gs(x, {"", "xy", "z"});
  // A repeated variable that may be bound.
  EXPECT_EQ(chi_abs(test::term(x, "f(z,z)"), s, x.all(), x), Multiplicity::kNonLinear);
  // A possibly non-linear variable.
  EXPECT_EQ(chi_abs(test::term(x, "f(z)"), s, vs(x, "xy"), x), Multiplicity::kNonLinear);
  // Two variables that may share.
  EXPECT_EQ(chi_abs(test::term(x, "f(x,y)"), s, x.all(), x), Multiplicity::kNonLinear);
  EXPECT_EQ(chi_abs(test::term(x, "f(x,z)"), s, x.all(), x), Multiplicity::kLinear);
  // Ground variables never make a term non-linear, and χ is never 0.
  EXPECT_EQ(chi_abs(test::term(x, "f(y,y)"), gs(x, {"", "x"}), VarSet{}, x), Multiplicity::kLinear);
  EXPECT_EQ(chi_abs(test::term(x, "a()"), s, x.all(), x), Multiplicity::kLinear);
}

TEST(Sharing, AbstractMultiplicityAgreesWithDefinition) {
  std::mt19937_64 rng(3);
  const auto x = universe("xyz");
  const char* terms[] = {"x", "f(x,y)", "g(x,x)", "f(g(x,z),y)", "h(y,a(),z)", "g(z,g(z,y))", "a()"};
  for (int round = 0; round < 200; ++round) {
    const GroupSet s = random_groups(rng, x, 4);
    const VarSet linear = VarSet::from_bits(rng() & x.all().bits());
    for (const char* text : terms) {
      const Term t = test::term(x, text);
      EXPECT_EQ(static_cast<int>(chi_abs(t, s, linear, x)),
                oracle::chi(t, oracle::naive(s, x), oracle::names(linear, x)))
          << text;
    }
  }
}

TEST(Sharing, FileDecompositionMatchesSubsetEnumeration) {
  std::mt19937_64 rng(5);
  const auto x = universe("wxyz");
  for (int round = 0; round < 300; ++round) {
    GroupSet s = random_groups(rng, x, 7);
    s.insert(VarSet{});
    const VarSet free = VarSet::from_bits(rng() & x.all().bits());
    std::set<oracle::Sharing> got;
    for (const GroupSet& b : file_decomposition(s, free)) got.insert(oracle::naive(b, x));
    const auto expected = oracle::kf(oracle::naive(s, x), oracle::names(free, x));
    EXPECT_EQ(got, std::set<oracle::Sharing>(expected.begin(), expected.end()));
  }
}

TEST(Sharing, FileDecompositionBound) {
  const auto x = universe("xyz");
  const GroupSet s = gs(x, {"", "x", "y", "z", "xy"});
  EXPECT_THROW(file_decomposition(s, VarSet{}, 4), LimitError);
  EXPECT_NO_THROW(file_decomposition(s, VarSet{}, 5));
  // With F = ∅ every subset qualifies.
  EXPECT_EQ(file_decomposition(s, VarSet{}).size(), 32U);
  // A free variable no group covers admits no block.
  EXPECT_TRUE(file_decomposition(gs(x, {"", "x"}), vs(x, "y")).empty());
}

TEST(Sharing, CoincidenceOnFileBlocks) {
  std::mt19937_64 rng(9);
  const auto x = universe("vwxyz");
  std::size_t blocks = 0;
  for (int round = 0; round < 200; ++round) {
    const GroupSet s = random_groups(rng, x, 6);
    const VarSet free = VarSet::from_bits(rng() & x.all().bits());
    for (const GroupSet& b : file_decomposition(s, free)) {
      ++blocks;
      auto subset = [&] {
        std::vector<VarSet> r;
        for (VarSet g : b) {
          if (rng() & 1U) r.push_back(g);
        }
        return GroupSet(r);
      };
      const GroupSet r = subset(), r1 = subset(), r2 = subset();
      EXPECT_EQ(star_f(r, free), closure_star(r));
      EXPECT_EQ(uplus_f(r1, r2, free), pairwise_union(r1, r2));
    }
  }
  EXPECT_GT(blocks, 100U);
}

}  // namespace
}  // namespace setshare
