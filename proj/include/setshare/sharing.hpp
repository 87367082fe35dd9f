#pragma once

#include <string>
#include <vector>

#include "setshare/group_set.hpp"
#include "setshare/terms.hpp"
#include "setshare/universe.hpp"

namespace setshare {

/// An element ⟨S, F, L⟩ of Sh × Fr × Lin over X.
///
/// Construction normalises: ∅ is added to S and F is added to L (free
/// variables are linear). Groups, F and L must lie within X.
class SharingTriple {
 public:
  SharingTriple(VariableUniverse universe, GroupSet sharing, VarSet free, VarSet linear);

  const VariableUniverse& universe() const { return universe_; }
  const GroupSet& sharing() const { return sharing_; }
  VarSet free() const { return free_; }
  VarSet linear() const { return linear_; }

  friend bool operator==(const SharingTriple& a, const SharingTriple& b) {
    return a.universe_ == b.universe_ && a.sharing_ == b.sharing_ && a.free_ == b.free_ &&
           a.linear_ == b.linear_;
  }

 private:
  VariableUniverse universe_;
  GroupSet sharing_;
  VarSet free_;
  VarSet linear_;
};

/// rel(t, S) = {G ∈ S | var(t) ∩ G ≠ ∅}, with var(t) given as a set.
GroupSet rel(VarSet term_vars, const GroupSet& groups);
GroupSet rel(const Term& t, const GroupSet& groups, const VariableUniverse& universe);

/// S*: least superset closed under binary union.
GroupSet closure_star(const GroupSet& groups);

/// S1 ⊎ S2 = {G1 ∪ G2 | G1 ∈ S1, G2 ∈ S2}.
GroupSet pairwise_union(const GroupSet& lhs, const GroupSet& rhs);

/// S1 ⊎_F S2: pairwise union that refuses to join two distinct groups
/// sharing a free variable.
GroupSet uplus_f(const GroupSet& lhs, const GroupSet& rhs, VarSet free);

/// S^{*_F}: least superset closed under union of pairs with no common free variable.
GroupSet star_f(const GroupSet& groups, VarSet free);

/// Abstract multiplicity χ(t, S, L) ∈ {1, 2}. Never reports groundness.
Multiplicity chi_abs(const Term& t, const GroupSet& groups, VarSet linear,
                     const VariableUniverse& universe);

/// K_F(S): every B ⊆ S that covers F and whose distinct groups are pairwise
/// disjoint on F. Exponential in |S|, so refuses (LimitError) when |S| > bound.
std::vector<GroupSet> file_decomposition(const GroupSet& groups, VarSet free,
                                         std::size_t bound = 16);

/// `{} {x,y} {y,z}`
std::string format_groups(const GroupSet& groups, const VariableUniverse& universe);

}  // namespace setshare
