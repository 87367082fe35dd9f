#pragma once

#include <initializer_list>
#include <vector>

#include "setshare/universe.hpp"

namespace setshare {

/// A duplicate-free set of sharing groups kept in canonical order
/// (cardinality, then lexicographic over declaration order).
class GroupSet {
 public:
  using const_iterator = std::vector<VarSet>::const_iterator;

  GroupSet() = default;
  GroupSet(std::initializer_list<VarSet> groups);
  explicit GroupSet(std::vector<VarSet> groups);

  bool contains(VarSet group) const;
  void insert(VarSet group);
  bool erase(VarSet group);

  std::size_t size() const { return groups_.size(); }
  bool empty() const { return groups_.empty(); }
  const_iterator begin() const { return groups_.begin(); }
  const_iterator end() const { return groups_.end(); }
  const std::vector<VarSet>& groups() const { return groups_; }

  /// var(S): the union of all groups.
  VarSet vars() const;
  bool subset_of(const GroupSet& other) const;

  friend bool operator==(const GroupSet&, const GroupSet&) = default;

 private:
  std::vector<VarSet> groups_;
};

GroupSet set_union(const GroupSet& a, const GroupSet& b);
GroupSet set_intersection(const GroupSet& a, const GroupSet& b);
GroupSet set_difference(const GroupSet& a, const GroupSet& b);

}  // namespace setshare
