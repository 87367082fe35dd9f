#pragma once

// Concrete semantics used as a soundness oracle: rational-tree unification
// (no occurs check) and the abstraction maps evaluated on binding graphs.
// The infinite limit of a solved form is never built; every query is a
// reachability or walk-counting question on the finite binding graph.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "setshare/group_set.hpp"
#include "setshare/pos.hpp"
#include "setshare/sharing.hpp"
#include "setshare/terms.hpp"

namespace setshare {

/// A substitution in rational solved form: bindings may be cyclic through
/// compounds but contain no pure variable-to-variable cycle.
class RationalSolvedForm {
 public:
  RationalSolvedForm() = default;
  /// Throws PreconditionError on a variable-variable cycle. Trivial
  /// bindings x ↦ x are dropped.
  explicit RationalSolvedForm(std::map<std::string, Term> bindings);

  const std::map<std::string, Term>& bindings() const { return bindings_; }
  const Term* binding(const std::string& var) const;
  bool is_bound(const std::string& var) const { return bindings_.contains(var); }

 private:
  std::map<std::string, Term> bindings_;
};

/// Solves E over rational trees. nullopt iff E has no unifier (a functor or
/// arity clash). The solved form's limit is an idempotent mgu of E, possibly
/// binding fresh `_G<n>` variables that name variable-free subterms.
std::optional<RationalSolvedForm> unify(const EquationSet& equations);

/// var(θ^∞(u)): the unbound variables reachable from u. An unbound u reaches itself.
std::set<std::string> reachable_vars(const RationalSolvedForm& rsf, const std::string& u);

/// occ(θ, y) ∩ X = {u ∈ X | y ∈ var(θ^∞(u))}.
VarSet occ(const RationalSolvedForm& rsf, const std::string& y, const VariableUniverse& universe);

/// α^Sh_X: every occ(θ, u) ∩ X, always including ∅.
GroupSet alpha_sh(const RationalSolvedForm& rsf, const VariableUniverse& universe);

/// α^Pos restricted to X; variables outside X are eliminated existentially.
PosFormula alpha_pos(const RationalSolvedForm& rsf, const VariableUniverse& universe);

/// θ^∞(x) ∈ U: the var-var chain from x ends at an unbound variable.
bool is_free(const RationalSolvedForm& rsf, const std::string& x);

/// χ(θ^∞(x)) by counting occurrence walks from x to each unbound variable.
Multiplicity multiplicity(const RationalSolvedForm& rsf, const std::string& x);

/// The most precise ⟨S, F, L⟩ describing rsf over X.
SharingTriple abstract_triple(const RationalSolvedForm& rsf, const VariableUniverse& universe);

/// Whether rsf's limit satisfies the sharing, freeness and linearity
/// constraints of the triple.
bool satisfies(const RationalSolvedForm& rsf, const SharingTriple& triple);

/// E ∈ γ^SFL_X(triple): E is satisfiable and its imgu satisfies the triple.
bool in_gamma_sfl(const EquationSet& equations, const SharingTriple& triple);

/// E ∈ γ^Pos_X(f).
bool in_gamma_pos(const EquationSet& equations, const PosFormula& f);

}  // namespace setshare
