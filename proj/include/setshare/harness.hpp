#pragma once

// Randomised property checking of the abstract operators against the
// concrete oracle.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "setshare/amgu.hpp"
#include "setshare/problem.hpp"

namespace setshare {

struct OracleConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::size_t max_vars = 4;
  std::size_t max_depth = 3;
  std::size_t max_eqs = 3;
  /// FILE_REF is only run when |S| is at most this.
  std::size_t file_bound = 8;
  std::size_t max_permutations = 6;
};

struct Counterexample {
  std::size_t trial = 0;
  std::string property;
  std::string detail;
  /// E₀ travels as the `given` lines, E′ as the `eq` lines.
  AnalysisProblem problem;
};

struct OracleReport {
  std::size_t trials = 0;
  /// Number of times each property was actually evaluated (vacuous cases excluded).
  std::map<std::string, std::size_t> checks;
  std::vector<Counterexample> counterexamples;  // sorted by trial
};

/// Random finite term of depth at most max_depth over `names` and the
/// functors a/0, f/1, g/2, h/3.
Term random_term(std::mt19937_64& rng, const std::vector<std::string>& names, std::size_t max_depth);

/// The instance of one trial: satisfiable E₀ in `context`, a (possibly
/// weakened) abstraction of it as `initial` and `groundness`, and E′.
AnalysisProblem generate_instance(const OracleConfig& config, std::size_t trial);

/// Every property on one instance. Deterministic, so a printed
/// counterexample replays to the same failure.
void check_instance(const AnalysisProblem& problem, const OracleConfig& config, std::size_t trial,
                    OracleReport& report);

OracleReport run_oracle(const OracleConfig& config);

/// Whether `result` describes E₀ ∪ {e}; vacuously true when that system has no unifier.
bool step_is_sound(const EquationSet& context, const Equation& e, const SharingTriple& result);

/// `# property …` comment lines followed by the problem text.
std::string format_counterexample(const Counterexample& c);

}  // namespace setshare
