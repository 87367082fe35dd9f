#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "setshare/universe.hpp"

namespace setshare {

/// Variable multiplicity: 0 ground, 1 linear, 2 some variable occurs at least twice.
enum class Multiplicity : std::uint8_t { kGround = 0, kLinear = 1, kNonLinear = 2 };

/// A finite first-order term. Functor identity is (name, arity); a compound
/// with no arguments is a constant.
class Term {
 public:
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);
  static Term constant(std::string name) { return compound(std::move(name), {}); }

  bool is_variable() const { return is_variable_; }
  /// Variable name or functor name.
  const std::string& name() const { return name_; }
  std::size_t arity() const { return args_.size(); }
  std::span<const Term> args() const { return args_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(std::string name, std::vector<Term> args, bool is_variable)
      : name_(std::move(name)), args_(std::move(args)), is_variable_(is_variable) {}

  std::string name_;
  std::vector<Term> args_;
  bool is_variable_ = false;
};

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Ordered; order only affects scheduling, never soundness.
using EquationSet = std::vector<Equation>;

std::set<std::string> vars(const Term& t);
std::set<std::string> vars(const EquationSet& equations);

Multiplicity chi_syntactic(const Term& t);

/// Variables of t as indices of X. Throws PreconditionError when var(t) is not within X.
VarSet var_set(const Term& t, const VariableUniverse& universe);
VarSet var_set(const EquationSet& equations, const VariableUniverse& universe);

struct Occurrences {
  VarSet any;       // occurs at least once
  VarSet repeated;  // occurs at least twice
};
Occurrences occurrences(const Term& t, const VariableUniverse& universe);

/// Whether t is a single variable belonging to `set` (the test "t ∈ F").
bool is_variable_in(const Term& t, VarSet set, const VariableUniverse& universe);

/// `x`, `f(x,a())`. Constants print with empty parentheses so that a bare
/// identifier always denotes a variable.
std::string to_string(const Term& t);
std::string to_string(const Equation& e);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Equation& e);

}  // namespace setshare
