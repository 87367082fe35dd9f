#include "setshare/terms.hpp"

#include <algorithm>
#include <map>

#include "setshare/error.hpp"

namespace setshare {

Term Term::variable(std::string name) {
  if (name.empty()) throw PreconditionError("empty variable name");
  return Term(std::move(name), {}, true);
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (functor.empty()) throw PreconditionError("empty functor name");
  return Term(std::move(functor), std::move(args), false);
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

void count_vars(const Term& t, std::map<std::string, int>& counts) {
  if (t.is_variable()) {
    ++counts[t.name()];
    return;
  }
  for (const auto& a : t.args()) count_vars(a, counts);
}

void collect_occurrences(const Term& t, const VariableUniverse& universe, Occurrences& occ) {
  if (t.is_variable()) {
    const std::size_t i = universe.require(t.name());
    if (occ.any.contains(i)) occ.repeated.insert(i);
    occ.any.insert(i);
    return;
  }
  for (const auto& a : t.args()) collect_occurrences(a, universe, occ);
}

void print(std::string& out, const Term& t) {
  out += t.name();
  if (t.is_variable()) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    print(out, t.args()[i]);
  }
  out += ')';
}

}  // namespace

std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> vars(const EquationSet& equations) {
  std::set<std::string> out;
  for (const auto& e : equations) {
    collect_vars(e.lhs, out);
    collect_vars(e.rhs, out);
  }
  return out;
}

Multiplicity chi_syntactic(const Term& t) {
  std::map<std::string, int> counts;
  count_vars(t, counts);
  int worst = 0;
  for (const auto& [name, n] : counts) worst = std::max(worst, std::min(2, n));
  return static_cast<Multiplicity>(worst);
}

VarSet var_set(const Term& t, const VariableUniverse& universe) {
  return occurrences(t, universe).any;
}

VarSet var_set(const EquationSet& equations, const VariableUniverse& universe) {
  VarSet out;
  for (const auto& e : equations) out |= var_set(e.lhs, universe) | var_set(e.rhs, universe);
  return out;
}

Occurrences occurrences(const Term& t, const VariableUniverse& universe) {
  Occurrences occ;
  collect_occurrences(t, universe, occ);
  return occ;
}

bool is_variable_in(const Term& t, VarSet set, const VariableUniverse& universe) {
  return t.is_variable() && set.contains(universe.require(t.name()));
}

std::string to_string(const Term& t) {
  std::string out;
  print(out, t);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Equation& e) { return os << to_string(e); }

}  // namespace setshare
