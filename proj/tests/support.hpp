#pragma once

// Shorthand for building fixtures. Variable names in tests are single
// letters, so a group is written as the string of its members: "xy" = {x,y}.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "setshare/group_set.hpp"
#include "setshare/problem.hpp"
#include "setshare/sharing.hpp"
#include "setshare/terms.hpp"
#include "setshare/universe.hpp"

namespace setshare::test {

inline VariableUniverse universe(std::string_view letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return VariableUniverse(std::move(names));
}

inline VarSet vs(const VariableUniverse& x, std::string_view letters) {
  VarSet out;
  for (char c : letters) out.insert(x.require(std::string(1, c)));
  return out;
}

inline GroupSet gs(const VariableUniverse& x, std::initializer_list<std::string_view> groups) {
  std::vector<VarSet> out;
  for (auto g : groups) out.push_back(vs(x, g));
  return GroupSet(std::move(out));
}

inline SharingTriple triple(const VariableUniverse& x, std::initializer_list<std::string_view> groups,
                            std::string_view free, std::string_view linear) {
  return SharingTriple(x, gs(x, groups), vs(x, free), vs(x, linear));
}

inline Term term(const VariableUniverse& x, std::string_view text) { return parse_term(text, x); }

inline Equation equation(const VariableUniverse& x, std::string_view lhs, std::string_view rhs) {
  return Equation{term(x, lhs), term(x, rhs)};
}

}  // namespace setshare::test
