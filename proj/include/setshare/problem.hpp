#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "setshare/pos.hpp"
#include "setshare/sharing.hpp"
#include "setshare/terms.hpp"

namespace setshare {

/// The unit of work of the analyser: an initial abstract state over X, an
/// optional groundness formula (absent means `true`), and the equations to
/// solve abstractly.
struct AnalysisProblem {
  VariableUniverse universe;
  SharingTriple initial;
  std::optional<PosFormula> groundness;
  EquationSet equations;
  /// Concrete equations the initial state is meant to describe. Only the
  /// oracle's replay mode reads them; the analyser ignores them.
  EquationSet context;

  friend bool operator==(const AnalysisProblem&, const AnalysisProblem&) = default;
};

/// Parses the line-oriented problem format:
///
///     # comment
///     vars x y z
///     sharing {} {x,y} {y,z}
///     free x
///     lin x y
///     pos x | y
///     eq x = f(y,a())
///     given x = y
///
/// `vars` comes first; `sharing`, `free`, `lin` and `pos` appear at most once;
/// `eq` and `given` repeat. A bare identifier in a term is a variable and must
/// be declared; constants are written `a()`.
///
/// Throws ParseError (with line/column) for malformed text and SemanticError
/// for undeclared variables or a non-positive `pos` formula.
AnalysisProblem parse_problem(std::string_view text);

/// Canonical text that parses back to an equal problem.
std::string print_problem(const AnalysisProblem& problem);

/// The `vars`/`sharing`/`free`/`lin` lines of a triple, each newline-terminated.
std::string print_triple(const SharingTriple& triple);

/// Parses a single term against X, e.g. for tests and tooling.
Term parse_term(std::string_view text, const VariableUniverse& universe);

}  // namespace setshare
