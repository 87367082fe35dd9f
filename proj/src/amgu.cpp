#include "setshare/amgu.hpp"

#include <algorithm>

#include "setshare/error.hpp"

namespace setshare {

namespace {

struct Step {
  GroupSet relevant_s;
  GroupSet relevant_t;
  Multiplicity chi_s;
  Multiplicity chi_t;
  bool s_free;
  bool t_free;

  bool both_linear() const {
    return chi_s == Multiplicity::kLinear && chi_t == Multiplicity::kLinear;
  }
};

Step prepare(const SharingTriple& triple, const Term& s, const Term& t) {
  const VariableUniverse& x = triple.universe();
  const GroupSet& sh = triple.sharing();
  return Step{rel(s, sh, x),
              rel(t, sh, x),
              chi_abs(s, sh, triple.linear(), x),
              chi_abs(t, sh, triple.linear(), x),
              is_variable_in(s, triple.free(), x),
              is_variable_in(t, triple.free(), x)};
}

// S' from the replacement for the relevant groups; F' and L' are shared by
// all three algorithms.
SharingTriple finish(const SharingTriple& triple, const Step& step, const GroupSet& replacement,
                     const GroupSet& combined, AmguTrace* trace) {
  const GroupSet relevant = set_union(step.relevant_s, step.relevant_t);
  const GroupSet sharing = set_union(set_difference(triple.sharing(), relevant), replacement);
  const VarSet all = triple.universe().all();
  const VarSet ground = all - sharing.vars();
  const VarSet vars_s = step.relevant_s.vars();
  const VarSet vars_t = step.relevant_t.vars();

  VarSet free = triple.free();
  if (step.s_free && step.t_free) {
  } else if (step.s_free) {
    free -= vars_s;
  } else if (step.t_free) {
    free -= vars_t;
  } else {
    free -= vars_s | vars_t;
  }

  VarSet linear = triple.linear();
  const bool s_linear = step.chi_s == Multiplicity::kLinear;
  const bool t_linear = step.chi_t == Multiplicity::kLinear;
  if (s_linear && t_linear) {
    linear -= vars_s & vars_t;
  } else if (s_linear) {
    linear -= vars_s;
  } else if (t_linear) {
    linear -= vars_t;
  } else {
    linear -= vars_s | vars_t;
  }
  linear |= free | ground;

  if (trace != nullptr) {
    *trace = AmguTrace{step.relevant_s, step.relevant_t, combined, step.chi_s, step.chi_t};
  }
  return SharingTriple(triple.universe(), sharing, free, linear);
}

// The linearity case split common to amgu1 and amgu2, parameterised by the
// closure and pairwise-union operators.
template <typename Star, typename Uplus>
GroupSet combine(const Step& step, bool trade_efficiency, Star star, Uplus uplus) {
  const GroupSet& ss = step.relevant_s;
  const GroupSet& st = step.relevant_t;
  if (step.both_linear()) {
    if (trade_efficiency) {
      if (!ss.vars().intersects(st.vars())) return uplus(ss, st);
      return ss.size() <= st.size() ? uplus(star(ss), st) : uplus(ss, star(st));
    }
    return set_intersection(uplus(star(ss), st), uplus(ss, star(st)));
  }
  if (step.chi_s == Multiplicity::kLinear) return uplus(star(ss), st);
  if (step.chi_t == Multiplicity::kLinear) return uplus(ss, star(st));
  return uplus(star(ss), star(st));
}

GroupSet combine_amgu1(const Step& step, bool trade_efficiency) {
  if (step.s_free || step.t_free) return pairwise_union(step.relevant_s, step.relevant_t);
  return combine(step, trade_efficiency, closure_star, pairwise_union);
}

GroupSet combine_amgu2(const Step& step, VarSet free, bool trade_efficiency) {
  return combine(
      step, trade_efficiency, [free](const GroupSet& g) { return star_f(g, free); },
      [free](const GroupSet& a, const GroupSet& b) { return uplus_f(a, b, free); });
}

void require_same_universe(const PosFormula& f, const SharingTriple& triple) {
  if (!(f.universe() == triple.universe())) {
    throw PreconditionError("groundness formula and sharing triple range over different universes");
  }
}

}  // namespace

SharingTriple amgu1(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency, AmguTrace* trace) {
  const Step step = prepare(triple, s, t);
  const GroupSet combined = combine_amgu1(step, trade_efficiency);
  return finish(triple, step, combined, combined, trace);
}

SharingTriple amgu2(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency, AmguTrace* trace) {
  const Step step = prepare(triple, s, t);
  const GroupSet combined = combine_amgu2(step, triple.free(), trade_efficiency);
  return finish(triple, step, combined, combined, trace);
}

SharingTriple amgu3(const SharingTriple& triple, const Term& s, const Term& t,
                    bool trade_efficiency, AmguTrace* trace) {
  const Step step = prepare(triple, s, t);
  const VariableUniverse& x = triple.universe();
  const VarSet free = triple.free();

  // A free variable unified with a non-variable term: in each computational
  // path (one group G of the free side) the variable is ground exactly when
  // the other side's variables outside G ∩ F are.
  const bool lhs_case = step.s_free && !t.is_variable();
  const bool rhs_case = step.t_free && !s.is_variable();
  if (lhs_case || rhs_case) {
    const Term& var_side = lhs_case ? s : t;
    const Term& other = lhs_case ? t : s;
    const GroupSet& per_path = lhs_case ? step.relevant_s : step.relevant_t;
    const GroupSet& rest = lhs_case ? step.relevant_t : step.relevant_s;
    const VarSet var_bit = VarSet::singleton(x.require(var_side.name()));
    const VarSet other_vars = var_set(other, x);

    GroupSet replacement;
    for (VarSet g : per_path) {
      const GroupSet joined =
          lhs_case ? uplus_f(GroupSet{g}, rest, free) : uplus_f(rest, GroupSet{g}, free);
      const VarSet ground_with = other_vars - (g & free);
      replacement = set_union(replacement, trim_biconditional(var_bit, ground_with, joined));
    }
    return finish(triple, step, replacement, replacement, trace);
  }

  const GroupSet combined = combine_amgu2(step, free, trade_efficiency);
  return finish(triple, step, combined, combined, trace);
}

SharingTriple file_reference(const SharingTriple& triple, const Term& s, const Term& t,
                             std::size_t bound) {
  const VariableUniverse& x = triple.universe();
  // Validate var(s), var(t) ⊆ X even when the decomposition is empty.
  (void)var_set(s, x);
  (void)var_set(t, x);

  const std::vector<GroupSet> blocks = file_decomposition(triple.sharing(), triple.free(), bound);
  GroupSet sharing;
  VarSet free = x.all();
  VarSet linear = x.all();
  for (const GroupSet& block : blocks) {
    const SharingTriple r = amgu1(SharingTriple(x, block, triple.free(), triple.linear()), s, t);
    sharing = set_union(sharing, r.sharing());
    free &= r.free();
    linear &= r.linear();
  }
  return SharingTriple(x, sharing, free, linear);
}

SharingTriple amgu(const SharingTriple& triple, const Equation& e, const AmguConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kAmgu1: return amgu1(triple, e.lhs, e.rhs, config.trade_efficiency);
    case Algorithm::kAmgu2: return amgu2(triple, e.lhs, e.rhs, config.trade_efficiency);
    case Algorithm::kAmgu3: return amgu3(triple, e.lhs, e.rhs, config.trade_efficiency);
    case Algorithm::kFileReference: return file_reference(triple, e.lhs, e.rhs, config.file_bound);
  }
  throw PreconditionError("unknown algorithm");
}

EquationSet schedule(const EquationSet& equations, EquationOrder order) {
  EquationSet out = equations;
  if (order == EquationOrder::kGroundFirst) {
    std::stable_partition(out.begin(), out.end(), [](const Equation& e) {
      return vars(e.lhs).empty() || vars(e.rhs).empty();
    });
  }
  return out;
}

SharingTriple amgu_set(const SharingTriple& triple, const EquationSet& equations,
                       const AmguConfig& config) {
  SharingTriple current = triple;
  for (const Equation& e : schedule(equations, config.order)) current = amgu(current, e, config);
  return current;
}

SharingTriple early_prune(const PosFormula& f, const EquationSet& equations,
                          const SharingTriple& triple) {
  require_same_universe(f, triple);
  const VariableUniverse& x = triple.universe();
  PosFormula with_equations = f;
  for (const Equation& e : equations) with_equations = conj(with_equations, abstract_equation(e, x));
  const VarSet ground = entailed_ground(with_equations);

  const GroupSet sharing = trim(conj(f, PosFormula::conjunction_of(x, ground)), triple.sharing());
  const VarSet free = triple.free() - rel(ground, triple.sharing()).vars();
  return SharingTriple(x, sharing, free, triple.linear() | ground);
}

AnalysisResult analyze(const AnalysisProblem& problem, const AmguConfig& config) {
  if (!config.early_prune) {
    return AnalysisResult{std::nullopt, amgu_set(problem.initial, problem.equations, config)};
  }
  const PosFormula f = problem.groundness.value_or(PosFormula(problem.universe));
  SharingTriple pruned = early_prune(f, problem.equations, problem.initial);
  SharingTriple result = amgu_set(pruned, problem.equations, config);
  return AnalysisResult{std::move(pruned), std::move(result)};
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAmgu1: return "amgu1";
    case Algorithm::kAmgu2: return "amgu2";
    case Algorithm::kAmgu3: return "amgu3";
    case Algorithm::kFileReference: return "file";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& text) {
  if (text == "1" || text == "amgu1") return Algorithm::kAmgu1;
  if (text == "2" || text == "amgu2") return Algorithm::kAmgu2;
  if (text == "3" || text == "amgu3") return Algorithm::kAmgu3;
  if (text == "file") return Algorithm::kFileReference;
  return std::nullopt;
}

}  // namespace setshare
