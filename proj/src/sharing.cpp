#include "setshare/sharing.hpp"

#include <algorithm>
#include <unordered_set>

#include "setshare/error.hpp"

namespace setshare {

namespace {

GroupSet from_bits(const std::unordered_set<std::uint64_t>& bits) {
  std::vector<VarSet> groups;
  groups.reserve(bits.size());
  for (std::uint64_t b : bits) groups.push_back(VarSet::from_bits(b));
  return GroupSet(std::move(groups));
}

// Shared by S* and S^{*_F}: every group is joined with every union built so
// far that it may be joined with. The result is the set of unions of
// non-empty subfamilies whose members pass `joinable` pairwise.
template <typename Joinable>
GroupSet incremental_closure(const GroupSet& groups, Joinable joinable) {
  std::unordered_set<std::uint64_t> closed;
  std::vector<VarSet> members;
  for (VarSet g : groups) {
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      if (!joinable(g, members[i])) continue;
      const VarSet u = g | members[i];
      if (closed.insert(u.bits()).second) members.push_back(u);
    }
    if (closed.insert(g.bits()).second) members.push_back(g);
  }
  return from_bits(closed);
}

}  // namespace

SharingTriple::SharingTriple(VariableUniverse universe, GroupSet sharing, VarSet free,
                             VarSet linear)
    : universe_(std::move(universe)),
      sharing_(std::move(sharing)),
      free_(free),
      linear_(linear | free) {
  const VarSet all = universe_.all();
  if (!sharing_.vars().subset_of(all)) {
    throw PreconditionError("sharing group mentions a variable outside the universe");
  }
  if (!free_.subset_of(all) || !linear_.subset_of(all)) {
    throw PreconditionError("free/linear set mentions a variable outside the universe");
  }
  sharing_.insert(VarSet{});
}

GroupSet rel(VarSet term_vars, const GroupSet& groups) {
  std::vector<VarSet> out;
  for (VarSet g : groups) {
    if (g.intersects(term_vars)) out.push_back(g);
  }
  return GroupSet(std::move(out));
}

GroupSet rel(const Term& t, const GroupSet& groups, const VariableUniverse& universe) {
  return rel(var_set(t, universe), groups);
}

GroupSet closure_star(const GroupSet& groups) {
  return incremental_closure(groups, [](VarSet, VarSet) { return true; });
}

GroupSet pairwise_union(const GroupSet& lhs, const GroupSet& rhs) {
  std::vector<VarSet> out;
  out.reserve(lhs.size() * rhs.size());
  for (VarSet a : lhs) {
    for (VarSet b : rhs) out.push_back(a | b);
  }
  return GroupSet(std::move(out));
}

GroupSet uplus_f(const GroupSet& lhs, const GroupSet& rhs, VarSet free) {
  std::vector<VarSet> out;
  for (VarSet a : lhs) {
    for (VarSet b : rhs) {
      if (a != b && (a & b).intersects(free)) continue;
      out.push_back(a | b);
    }
  }
  return GroupSet(std::move(out));
}

GroupSet star_f(const GroupSet& groups, VarSet free) {
  return incremental_closure(groups, [free](VarSet a, VarSet b) { return !(a & b).intersects(free); });
}

Multiplicity chi_abs(const Term& t, const GroupSet& groups, VarSet linear,
                     const VariableUniverse& universe) {
  const Occurrences occ = occurrences(t, universe);
  const VarSet shared = groups.vars();
  if (occ.repeated.intersects(shared)) return Multiplicity::kNonLinear;
  if ((occ.any - linear).intersects(shared)) return Multiplicity::kNonLinear;
  for (VarSet g : groups) {
    if ((g & occ.any).size() >= 2) return Multiplicity::kNonLinear;
  }
  return Multiplicity::kLinear;
}

std::vector<GroupSet> file_decomposition(const GroupSet& groups, VarSet free, std::size_t bound) {
  if (groups.size() > bound) {
    throw LimitError("Filé decomposition refused: |S| = " + std::to_string(groups.size()) +
                     " exceeds the bound " + std::to_string(bound));
  }
  const std::vector<VarSet>& all = groups.groups();
  std::vector<GroupSet> blocks;
  std::vector<VarSet> chosen;

  // Distinct members must be disjoint on F, so a member's free part may not
  // overlap the free parts chosen before it.
  auto search = [&](auto& self, std::size_t index, VarSet covered) -> void {
    if (index == all.size()) {
      if (free.subset_of(covered)) blocks.emplace_back(chosen);
      return;
    }
    self(self, index + 1, covered);
    const VarSet g = all[index];
    const VarSet g_free = g & free;
    if (g_free.intersects(covered)) return;
    chosen.push_back(g);
    self(self, index + 1, covered | g_free);
    chosen.pop_back();
  };
  search(search, 0, VarSet{});

  std::sort(blocks.begin(), blocks.end(), [](const GroupSet& a, const GroupSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
  });
  return blocks;
}

std::string format_groups(const GroupSet& groups, const VariableUniverse& universe) {
  std::string out;
  for (VarSet g : groups) {
    if (!out.empty()) out += ' ';
    out += universe.format_group(g);
  }
  return out;
}

}  // namespace setshare
