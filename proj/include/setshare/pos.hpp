#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "setshare/group_set.hpp"
#include "setshare/terms.hpp"
#include "setshare/universe.hpp"

namespace setshare {

/// Boolean expression over named variables, as written in problem files.
struct FormulaExpr {
  enum class Kind { kTrue, kVar, kNot, kAnd, kOr, kImplies, kIff };

  Kind kind = Kind::kTrue;
  std::string name;                   // kVar only
  std::vector<FormulaExpr> operands;  // 1 for kNot, 2 for binary connectives

  static FormulaExpr truth() { return {}; }
  static FormulaExpr var(std::string name) { return {Kind::kVar, std::move(name), {}}; }
  static FormulaExpr negation(FormulaExpr e) { return {Kind::kNot, {}, {std::move(e)}}; }
  static FormulaExpr binary(Kind k, FormulaExpr a, FormulaExpr b) {
    return {k, {}, {std::move(a), std::move(b)}};
  }
};

/// Parses the formula surface syntax: variables, `true`, `~`, `&`, `|`, `->`,
/// `<->` and parentheses. Precedence ~ > & > | > -> > <->; arrows associate
/// to the right. `line`/`column_offset` position error reports inside a file.
FormulaExpr parse_formula(std::string_view text, std::size_t line = 0,
                          std::size_t column_offset = 0);

/// A positive Boolean function over X, held as its explicit model set.
/// Models are subsets M of X (variables true in the assignment); X itself is
/// always a model.
class PosFormula {
 public:
  static constexpr std::size_t kMaxVariables = 20;

  /// The constant `true` over X.
  explicit PosFormula(const VariableUniverse& universe);

  /// Builds {M ⊆ X | is_model(M)}; throws NotPositiveError if X is not a model.
  static PosFormula from_predicate(const VariableUniverse& universe,
                                   const std::function<bool(VarSet)>& is_model);
  /// ∧vars
  static PosFormula conjunction_of(const VariableUniverse& universe, VarSet vars);
  /// ∧lhs ↔ ∧rhs
  static PosFormula biconditional(const VariableUniverse& universe, VarSet lhs, VarSet rhs);

  const VariableUniverse& universe() const { return universe_; }
  bool is_model(VarSet m) const { return models_[m.bits()]; }
  std::size_t model_count() const;
  /// All models in canonical order.
  std::vector<VarSet> models() const;

  friend bool operator==(const PosFormula& a, const PosFormula& b) {
    return a.universe_ == b.universe_ && a.models_ == b.models_;
  }

 private:
  PosFormula(VariableUniverse universe, std::vector<bool> models)
      : universe_(std::move(universe)), models_(std::move(models)) {}

  VariableUniverse universe_;
  std::vector<bool> models_;  // indexed by VarSet::bits()
};

/// model_X of an expression. Throws SemanticError for variables outside X and
/// NotPositiveError when the result is not in Pos.
PosFormula make_formula(const FormulaExpr& expr, const VariableUniverse& universe);

PosFormula conj(const PosFormula& f, const PosFormula& g);
/// f ⊨ g
bool entails(const PosFormula& f, const PosFormula& g);

/// ∧var(lhs) ↔ ∧var(rhs).
PosFormula abstract_equation(const Equation& e, const VariableUniverse& universe);

/// {y ∈ X | f ⊨ y}
VarSet entailed_ground(const PosFormula& f);

/// Keeps the groups G with X \ G a model of f.
GroupSet trim(const PosFormula& f, const GroupSet& groups);

/// trim(∧lhs ↔ ∧rhs, groups) decided per group without building the model
/// set: X \ G satisfies the biconditional iff G misses lhs exactly when it
/// misses rhs.
GroupSet trim_biconditional(VarSet lhs, VarSet rhs, const GroupSet& groups);

/// Canonical surface syntax: `true`, a disjunction of minterms, or a
/// conjunction of implications excluding the non-models, whichever is shorter
/// in clause count. Reparses to an equal formula.
std::string to_string(const PosFormula& f);

}  // namespace setshare
