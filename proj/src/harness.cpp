#include "setshare/harness.hpp"

#include <algorithm>
#include <numeric>

#include "setshare/concrete.hpp"
#include "setshare/error.hpp"

namespace setshare {

namespace {

const std::vector<std::string> kNames = {"u", "v", "w", "x", "y", "z", "p", "q", "r", "s"};

struct Functor {
  const char* name;
  std::size_t arity;
};
constexpr Functor kFunctors[] = {{"a", 0}, {"f", 1}, {"g", 2}, {"h", 3}};

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool chance(std::mt19937_64& rng, std::size_t num, std::size_t den) { return pick(rng, den) < num; }

Equation random_equation(std::mt19937_64& rng, const std::vector<std::string>& names,
                         std::size_t max_depth) {
  Term lhs = chance(rng, 2, 3) ? Term::variable(names[pick(rng, names.size())])
                               : random_term(rng, names, max_depth);
  return Equation{std::move(lhs), random_term(rng, names, max_depth)};
}

EquationSet random_equations(std::mt19937_64& rng, const std::vector<std::string>& names,
                             std::size_t min_count, std::size_t max_count, std::size_t max_depth) {
  const std::size_t n = min_count + pick(rng, max_count - min_count + 1);
  EquationSet out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_equation(rng, names, max_depth));
  return out;
}

// A description of E₀ that is still sound but coarser than its abstraction.
SharingTriple weaken(std::mt19937_64& rng, const SharingTriple& t) {
  const VariableUniverse& x = t.universe();
  const std::uint64_t all = x.all().bits();
  GroupSet sharing = t.sharing();
  VarSet free = t.free();
  VarSet linear = t.linear();
  if (chance(rng, 1, 3)) {
    const std::size_t extra = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < extra; ++i) sharing.insert(VarSet::from_bits(rng() & all));
  }
  if (chance(rng, 1, 4)) free = VarSet::from_bits(free.bits() & rng());
  if (chance(rng, 1, 4)) linear = VarSet::from_bits(linear.bits() & rng()) | free;
  return SharingTriple(x, std::move(sharing), free, linear);
}

EquationSet concat(const EquationSet& a, const EquationSet& b) {
  EquationSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

class Checker {
 public:
  Checker(const AnalysisProblem& problem, const OracleConfig& config, std::size_t trial,
          OracleReport& report)
      : problem_(problem), config_(config), trial_(trial), report_(report) {}

  void run() {
    const auto rsf = unify(problem_.context);
    if (!check("context-satisfiable", rsf.has_value(), "E0 has no unifier")) return;
    check_concrete(*rsf);
    check("initial-describes-context", satisfies(*rsf, problem_.initial),
          "E0 is not in the concretisation of the initial triple");
    if (problem_.groundness) {
      check("groundness-describes-context", in_gamma_pos(problem_.context, *problem_.groundness),
            "E0 is not in the concretisation of the groundness formula");
    }
    for (const Equation& e : problem_.equations) check_step(e);
    check_set();
  }

 private:
  bool check(const std::string& property, bool ok, const std::string& detail) {
    ++report_.checks[property];
    if (!ok) report_.counterexamples.push_back(Counterexample{trial_, property, detail, problem_});
    return ok;
  }

  void check_concrete(const RationalSolvedForm& rsf) {
    const VariableUniverse& x = problem_.universe;
    const PosFormula pos = alpha_pos(rsf, x);
    bool holds = true;
    for (VarSet g : alpha_sh(rsf, x)) holds = holds && pos.is_model(x.all() - g);
    check("complements-are-models", holds, "a complement of an alpha_sh group is not a model of alpha_pos");

    const SharingTriple abstraction = abstract_triple(rsf, x);
    check("abstraction-satisfied", satisfies(rsf, abstraction),
          "the solved form does not satisfy its own abstraction");

    EquationSet reversed(problem_.context.rbegin(), problem_.context.rend());
    for (Equation& e : reversed) std::swap(e.lhs, e.rhs);
    const auto other = unify(reversed);
    check("unify-order-insensitive",
          other && abstract_triple(*other, x) == abstraction && alpha_pos(*other, x) == pos,
          "reversing E0 changes the abstraction of its unifier");
  }

  void check_step(const Equation& e) {
    const SharingTriple& t0 = problem_.initial;
    const std::string eq = to_string(e);

    AmguTrace trace;
    const SharingTriple r1 = amgu1(t0, e.lhs, e.rhs, false, &trace);
    const SharingTriple r2 = amgu2(t0, e.lhs, e.rhs);
    const SharingTriple r3 = amgu3(t0, e.lhs, e.rhs);

    for (const auto& [name, r] : {std::pair{"amgu1", &r1}, {"amgu2", &r2}, {"amgu3", &r3}}) {
      check_output(*r, std::string(name) + " on " + eq);
      if (!satisfiable_with(e)) continue;
      check(std::string("step-soundness-") + name, step_is_sound(problem_.context, e, *r),
            std::string(name) + " on " + eq + " does not describe E0 with the equation");
    }

    check("precision-amgu3-amgu2", r3.sharing().subset_of(r2.sharing()), "amgu3 S not within amgu2 S on " + eq);
    check("precision-amgu2-amgu1", r2.sharing().subset_of(r1.sharing()), "amgu2 S not within amgu1 S on " + eq);

    if (t0.sharing().size() <= config_.file_bound) {
      const SharingTriple rf = file_reference(t0, e.lhs, e.rhs, config_.file_bound);
      check_output(rf, "file on " + eq);
      check("precision-file-amgu2", rf.sharing().subset_of(r2.sharing()), "file S not within amgu2 S on " + eq);
      if (satisfiable_with(e)) {
        check("step-soundness-file", step_is_sound(problem_.context, e, rf),
              "file on " + eq + " does not describe E0 with the equation");
      }
    }

    const bool linear = trace.chi_lhs == Multiplicity::kLinear && trace.chi_rhs == Multiplicity::kLinear;
    if (linear && !trace.relevant_lhs.vars().intersects(trace.relevant_rhs.vars())) {
      check("independence-identity", trace.combined == pairwise_union(trace.relevant_lhs, trace.relevant_rhs),
            "amgu1 S'' differs from S_s (+) S_t on independent linear sides of " + eq);
    }

    const SharingTriple traded = amgu1(t0, e.lhs, e.rhs, true);
    check("trade-efficiency-coarser", r1.sharing().subset_of(traded.sharing()),
          "trading efficiency made amgu1 more precise on " + eq);
    if (satisfiable_with(e)) {
      check("step-soundness-amgu1-traded", step_is_sound(problem_.context, e, traded),
            "traded amgu1 on " + eq + " does not describe E0 with the equation");
      check("step-soundness-amgu3-traded", step_is_sound(problem_.context, e, amgu3(t0, e.lhs, e.rhs, true)),
            "traded amgu3 on " + eq + " does not describe E0 with the equation");
    }
  }

  void check_output(const SharingTriple& r, const std::string& what) {
    const bool ok = r.sharing().contains(VarSet{}) && r.free().subset_of(r.linear()) &&
                    r.sharing().vars().subset_of(r.universe().all());
    check("output-invariants", ok, what + " breaks an output invariant");
  }

  void check_set() {
    const EquationSet all = concat(problem_.context, problem_.equations);
    if (!unify(all)) return;

    std::vector<std::size_t> order(problem_.equations.size());
    std::iota(order.begin(), order.end(), 0);
    std::size_t permutations = 0;
    do {
      AnalysisProblem permuted = problem_;
      permuted.equations.clear();
      for (std::size_t i : order) permuted.equations.push_back(problem_.equations[i]);
      check_permutation(permuted, all);
    } while (++permutations < config_.max_permutations && std::next_permutation(order.begin(), order.end()));
  }

  void check_permutation(const AnalysisProblem& permuted, const EquationSet& all) {
    for (Algorithm algo : {Algorithm::kAmgu1, Algorithm::kAmgu2, Algorithm::kAmgu3, Algorithm::kFileReference}) {
      for (bool prune : {false, true}) {
        AmguConfig cfg;
        cfg.algorithm = algo;
        cfg.early_prune = prune;
        cfg.file_bound = config_.file_bound;
        SharingTriple result = permuted.initial;
        try {
          result = analyze(permuted, cfg).result;
        } catch (const LimitError&) {
          continue;
        }
        std::string order;
        for (const Equation& e : permuted.equations) order += (order.empty() ? "" : ", ") + to_string(e);
        check(std::string("set-soundness-") + to_string(algo) + (prune ? "-pruned" : ""),
              in_gamma_sfl(all, result),
              to_string(algo) + (prune ? " with" : " without") + " early pruning over [" + order +
                  "] does not describe E0 with E'");
      }
    }
  }

  bool satisfiable_with(const Equation& e) {
    return unify(concat(problem_.context, EquationSet{e})).has_value();
  }

  const AnalysisProblem& problem_;
  const OracleConfig& config_;
  std::size_t trial_;
  OracleReport& report_;
};

}  // namespace

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& names, std::size_t max_depth) {
  if (max_depth == 0 || chance(rng, 2, 5)) {
    if (chance(rng, 1, 6)) return Term::constant("a");
    return Term::variable(names[pick(rng, names.size())]);
  }
  const Functor& fn = kFunctors[1 + pick(rng, 3)];
  std::vector<Term> args;
  for (std::size_t i = 0; i < fn.arity; ++i) args.push_back(random_term(rng, names, max_depth - 1));
  return Term::compound(fn.name, std::move(args));
}

AnalysisProblem generate_instance(const OracleConfig& config, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);

  const std::size_t max_vars = std::clamp<std::size_t>(config.max_vars, 1, kNames.size());
  const std::size_t n = 1 + pick(rng, max_vars);
  std::vector<std::string> names(kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(n));
  VariableUniverse universe(names);

  EquationSet context;
  std::optional<RationalSolvedForm> rsf;
  for (int attempt = 0; attempt < 100 && !rsf; ++attempt) {
    context = random_equations(rng, names, 0, config.max_eqs, config.max_depth);
    rsf = unify(context);
  }
  if (!rsf) {
    context.clear();
    rsf = unify(context);
  }

  SharingTriple initial = abstract_triple(*rsf, universe);
  if (chance(rng, 1, 2)) initial = weaken(rng, initial);
  std::optional<PosFormula> groundness;
  if (!chance(rng, 1, 3)) groundness = alpha_pos(*rsf, universe);

  // Unsatisfiable E0 ∪ E' makes most properties vacuous, so retry a few times.
  const std::size_t max_eqs = std::max<std::size_t>(config.max_eqs, 1);
  EquationSet equations;
  for (int attempt = 0; attempt < 10; ++attempt) {
    equations = random_equations(rng, names, 1, max_eqs, config.max_depth);
    if (unify(concat(context, equations))) break;
  }
  return AnalysisProblem{universe, std::move(initial), std::move(groundness), std::move(equations),
                         std::move(context)};
}

void check_instance(const AnalysisProblem& problem, const OracleConfig& config, std::size_t trial,
                    OracleReport& report) {
  Checker(problem, config, trial, report).run();
}

OracleReport run_oracle(const OracleConfig& config) {
  OracleReport report;
  report.trials = config.trials;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    check_instance(generate_instance(config, trial), config, trial, report);
  }
  return report;
}

bool step_is_sound(const EquationSet& context, const Equation& e, const SharingTriple& result) {
  const EquationSet all = concat(context, EquationSet{e});
  if (!unify(all)) return true;
  return in_gamma_sfl(all, result);
}

std::string format_counterexample(const Counterexample& c) {
  return "# property " + c.property + "\n# trial " + std::to_string(c.trial) + "\n# " + c.detail + "\n" +
         print_problem(c.problem);
}

}  // namespace setshare
