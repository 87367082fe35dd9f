#pragma once

#include <optional>
#include <string>

#include "setshare/pos.hpp"
#include "setshare/problem.hpp"
#include "setshare/sharing.hpp"
#include "setshare/terms.hpp"

namespace setshare {

enum class Algorithm {
  kAmgu1,          // linearity exploited without the independence check
  kAmgu2,          // freeness absorbed into guarded closure and pairwise union
  kAmgu3,          // amgu2 plus groundness recovered from freeness
  kFileReference,  // amgu1 on every block of the Filé decomposition, then joined
};

enum class EquationOrder {
  kGiven,
  kGroundFirst,  // equations with a ground side first; stable otherwise
};

struct AmguConfig {
  Algorithm algorithm = Algorithm::kAmgu3;
  /// When both sides are linear but may share, compute a single closure
  /// instead of intersecting two. Less precise, never unsound.
  bool trade_efficiency = false;
  EquationOrder order = EquationOrder::kGiven;
  bool early_prune = true;
  /// Largest |S| the Filé decomposition accepts.
  std::size_t file_bound = 16;
};

/// Intermediate values of one abstract unification step.
struct AmguTrace {
  GroupSet relevant_lhs;  // S_s
  GroupSet relevant_rhs;  // S_t
  GroupSet combined;      // S'' (or the trimmed replacement for amgu3's freeness cases)
  Multiplicity chi_lhs = Multiplicity::kLinear;
  Multiplicity chi_rhs = Multiplicity::kLinear;
};

/// All single-step operators require var(s) ∪ var(t) ⊆ X and throw
/// PreconditionError otherwise.
SharingTriple amgu1(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency = false, AmguTrace* trace = nullptr);
SharingTriple amgu2(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency = false, AmguTrace* trace = nullptr);
SharingTriple amgu3(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency = false, AmguTrace* trace = nullptr);

/// Join of amgu1 over the Filé decomposition of S: sharing components united,
/// free and linear components intersected. An empty decomposition describes
/// no substitution and yields ⟨{∅}, X, X⟩. Throws LimitError when |S| > bound.
SharingTriple file_reference(const SharingTriple& triple, const Term& s, const Term& t,
                             std::size_t bound = 16);

/// One step with the configured algorithm.
SharingTriple amgu(const SharingTriple& triple, const Equation& e, const AmguConfig& config);

/// Equations in the order the configuration solves them.
EquationSet schedule(const EquationSet& equations, EquationOrder order);

/// Folds the configured algorithm over the scheduled equations.
SharingTriple amgu_set(const SharingTriple& triple, const EquationSet& equations,
                       const AmguConfig& config);

/// Prunes the triple with the groundness that f and the pending equations
/// jointly entail: with Y the entailed ground variables, returns
/// ⟨trim(f ∧ Y, S), F \ var(rel(Y, S)), L ∪ Y⟩.
SharingTriple early_prune(const PosFormula& f, const EquationSet& equations,
                          const SharingTriple& triple);

struct AnalysisResult {
  std::optional<SharingTriple> pruned;  // set when early pruning ran
  SharingTriple result;
};

/// Early pruning (when enabled) followed by amgu_set. Deterministic.
AnalysisResult analyze(const AnalysisProblem& problem, const AmguConfig& config);

std::string to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(const std::string& text);

}  // namespace setshare
