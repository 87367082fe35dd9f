#include "setshare/group_set.hpp"

#include <algorithm>
#include <iterator>

namespace setshare {

GroupSet::GroupSet(std::initializer_list<VarSet> groups) : GroupSet(std::vector<VarSet>(groups)) {}

GroupSet::GroupSet(std::vector<VarSet> groups) : groups_(std::move(groups)) {
  std::sort(groups_.begin(), groups_.end(), CanonicalLess{});
  groups_.erase(std::unique(groups_.begin(), groups_.end()), groups_.end());
}

bool GroupSet::contains(VarSet group) const {
  return std::binary_search(groups_.begin(), groups_.end(), group, CanonicalLess{});
}

void GroupSet::insert(VarSet group) {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), group, CanonicalLess{});
  if (it == groups_.end() || *it != group) groups_.insert(it, group);
}

bool GroupSet::erase(VarSet group) {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), group, CanonicalLess{});
  if (it == groups_.end() || *it != group) return false;
  groups_.erase(it);
  return true;
}

VarSet GroupSet::vars() const {
  VarSet out;
  for (VarSet g : groups_) out |= g;
  return out;
}

bool GroupSet::subset_of(const GroupSet& other) const {
  return std::includes(other.groups_.begin(), other.groups_.end(), groups_.begin(), groups_.end(),
                       CanonicalLess{});
}

GroupSet set_union(const GroupSet& a, const GroupSet& b) {
  std::vector<VarSet> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), CanonicalLess{});
  return GroupSet(std::move(out));
}

GroupSet set_intersection(const GroupSet& a, const GroupSet& b) {
  std::vector<VarSet> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        CanonicalLess{});
  return GroupSet(std::move(out));
}

GroupSet set_difference(const GroupSet& a, const GroupSet& b) {
  std::vector<VarSet> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      CanonicalLess{});
  return GroupSet(std::move(out));
}

}  // namespace setshare
