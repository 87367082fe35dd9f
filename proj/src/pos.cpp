#include "setshare/pos.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "setshare/error.hpp"

namespace setshare {

namespace {

using detail::Lexer;
using detail::TokenKind;

class FormulaParser {
 public:
  explicit FormulaParser(Lexer& lex) : lex_(lex) {}

  FormulaExpr parse_iff() {
    FormulaExpr lhs = parse_implies();
    if (lex_.accept(TokenKind::kIff)) {
      return FormulaExpr::binary(FormulaExpr::Kind::kIff, std::move(lhs), parse_iff());
    }
    return lhs;
  }

 private:
  FormulaExpr parse_implies() {
    FormulaExpr lhs = parse_or();
    if (lex_.accept(TokenKind::kArrow)) {
      return FormulaExpr::binary(FormulaExpr::Kind::kImplies, std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaExpr parse_or() {
    FormulaExpr lhs = parse_and();
    while (lex_.accept(TokenKind::kBar)) {
      lhs = FormulaExpr::binary(FormulaExpr::Kind::kOr, std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaExpr parse_and() {
    FormulaExpr lhs = parse_unary();
    while (lex_.accept(TokenKind::kAmp)) {
      lhs = FormulaExpr::binary(FormulaExpr::Kind::kAnd, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaExpr parse_unary() {
    if (lex_.accept(TokenKind::kTilde)) return FormulaExpr::negation(parse_unary());
    if (lex_.accept(TokenKind::kLParen)) {
      FormulaExpr inner = parse_iff();
      lex_.expect(TokenKind::kRParen);
      return inner;
    }
    if (lex_.peek().kind != TokenKind::kIdent) lex_.fail("expected a formula, found " + lex_.found());
    std::string name = lex_.next().text;
    if (name == "true") return FormulaExpr::truth();
    return FormulaExpr::var(std::move(name));
  }

  Lexer& lex_;
};

// Expression with variables resolved to indices, evaluated once per assignment.
struct Compiled {
  FormulaExpr::Kind kind;
  std::size_t var = 0;
  std::vector<Compiled> operands;

  bool eval(VarSet m) const {
    switch (kind) {
      case FormulaExpr::Kind::kTrue: return true;
      case FormulaExpr::Kind::kVar: return m.contains(var);
      case FormulaExpr::Kind::kNot: return !operands[0].eval(m);
      case FormulaExpr::Kind::kAnd: return operands[0].eval(m) && operands[1].eval(m);
      case FormulaExpr::Kind::kOr: return operands[0].eval(m) || operands[1].eval(m);
      case FormulaExpr::Kind::kImplies: return !operands[0].eval(m) || operands[1].eval(m);
      case FormulaExpr::Kind::kIff: return operands[0].eval(m) == operands[1].eval(m);
    }
    return false;
  }
};

Compiled compile(const FormulaExpr& e, const VariableUniverse& universe) {
  Compiled c{e.kind, 0, {}};
  if (e.kind == FormulaExpr::Kind::kVar) {
    auto i = universe.index_of(e.name);
    if (!i) throw SemanticError("formula mentions undeclared variable '" + e.name + "'");
    c.var = *i;
  }
  for (const auto& op : e.operands) c.operands.push_back(compile(op, universe));
  return c;
}

void check_size(const VariableUniverse& universe) {
  if (universe.size() > PosFormula::kMaxVariables) {
    throw LimitError("groundness formulas support at most " +
                     std::to_string(PosFormula::kMaxVariables) + " variables, got " +
                     std::to_string(universe.size()));
  }
}

void require_same_universe(const PosFormula& f, const PosFormula& g) {
  if (!(f.universe() == g.universe())) {
    throw PreconditionError("formulas range over different variable universes");
  }
}

std::string join_literals(const VariableUniverse& universe, VarSet set, const char* sep) {
  std::string out;
  for (std::size_t i : set) {
    if (!out.empty()) out += sep;
    out += universe.name(i);
  }
  return out;
}

}  // namespace

FormulaExpr parse_formula(std::string_view text, std::size_t line, std::size_t column_offset) {
  Lexer lex(text, line, column_offset);
  FormulaParser parser(lex);
  FormulaExpr e = parser.parse_iff();
  if (lex.peek().kind != TokenKind::kEnd) lex.fail("unexpected " + lex.found() + " after formula");
  return e;
}

PosFormula::PosFormula(const VariableUniverse& universe) : universe_(universe) {
  check_size(universe);
  models_.assign(std::size_t{1} << universe.size(), true);
}

PosFormula PosFormula::from_predicate(const VariableUniverse& universe,
                                      const std::function<bool(VarSet)>& is_model) {
  check_size(universe);
  const std::size_t count = std::size_t{1} << universe.size();
  std::vector<bool> models(count);
  for (std::size_t bits = 0; bits < count; ++bits) models[bits] = is_model(VarSet::from_bits(bits));
  if (!models[count - 1]) {
    throw NotPositiveError("formula is not positive: the all-true assignment is not a model");
  }
  return PosFormula(universe, std::move(models));
}

PosFormula PosFormula::conjunction_of(const VariableUniverse& universe, VarSet vars) {
  return from_predicate(universe, [vars](VarSet m) { return vars.subset_of(m); });
}

PosFormula PosFormula::biconditional(const VariableUniverse& universe, VarSet lhs, VarSet rhs) {
  return from_predicate(universe,
                        [lhs, rhs](VarSet m) { return lhs.subset_of(m) == rhs.subset_of(m); });
}

std::size_t PosFormula::model_count() const {
  return static_cast<std::size_t>(std::count(models_.begin(), models_.end(), true));
}

std::vector<VarSet> PosFormula::models() const {
  std::vector<VarSet> out;
  for (std::size_t bits = 0; bits < models_.size(); ++bits) {
    if (models_[bits]) out.push_back(VarSet::from_bits(bits));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

PosFormula make_formula(const FormulaExpr& expr, const VariableUniverse& universe) {
  const Compiled c = compile(expr, universe);
  return PosFormula::from_predicate(universe, [&c](VarSet m) { return c.eval(m); });
}

PosFormula conj(const PosFormula& f, const PosFormula& g) {
  require_same_universe(f, g);
  return PosFormula::from_predicate(f.universe(),
                                    [&](VarSet m) { return f.is_model(m) && g.is_model(m); });
}

bool entails(const PosFormula& f, const PosFormula& g) {
  require_same_universe(f, g);
  const std::size_t count = std::size_t{1} << f.universe().size();
  for (std::size_t bits = 0; bits < count; ++bits) {
    const VarSet m = VarSet::from_bits(bits);
    if (f.is_model(m) && !g.is_model(m)) return false;
  }
  return true;
}

PosFormula abstract_equation(const Equation& e, const VariableUniverse& universe) {
  return PosFormula::biconditional(universe, var_set(e.lhs, universe), var_set(e.rhs, universe));
}

VarSet entailed_ground(const PosFormula& f) {
  VarSet ground = f.universe().all();
  const std::size_t count = std::size_t{1} << f.universe().size();
  for (std::size_t bits = 0; bits < count; ++bits) {
    if (f.is_model(VarSet::from_bits(bits))) ground &= VarSet::from_bits(bits);
  }
  return ground;
}

GroupSet trim(const PosFormula& f, const GroupSet& groups) {
  const VarSet all = f.universe().all();
  std::vector<VarSet> kept;
  for (VarSet g : groups) {
    if (!g.subset_of(all)) throw PreconditionError("sharing group escapes the formula's universe");
    if (f.is_model(all - g)) kept.push_back(g);
  }
  return GroupSet(std::move(kept));
}

GroupSet trim_biconditional(VarSet lhs, VarSet rhs, const GroupSet& groups) {
  std::vector<VarSet> kept;
  for (VarSet g : groups) {
    if (g.intersects(lhs) == g.intersects(rhs)) kept.push_back(g);
  }
  return GroupSet(std::move(kept));
}

std::string to_string(const PosFormula& f) {
  const VariableUniverse& x = f.universe();
  const std::size_t total = std::size_t{1} << x.size();
  const std::size_t count = f.model_count();
  if (count == total) return "true";

  std::vector<VarSet> all_sets;
  all_sets.reserve(total);
  for (std::size_t bits = 0; bits < total; ++bits) all_sets.push_back(VarSet::from_bits(bits));
  std::sort(all_sets.begin(), all_sets.end(), CanonicalLess{});

  std::string out;
  if (count <= total - count) {
    for (VarSet m : all_sets) {
      if (!f.is_model(m)) continue;
      std::string term;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!term.empty()) term += " & ";
        if (!m.contains(i)) term += '~';
        term += x.name(i);
      }
      if (!out.empty()) out += " | ";
      out += "(" + term + ")";
    }
    return out;
  }
  for (VarSet m : all_sets) {
    if (f.is_model(m)) continue;
    // Excludes exactly the assignment m: (∧m) -> (∨(X \ m)); X \ m is non-empty.
    std::string clause = join_literals(x, x.all() - m, " | ");
    if (!m.empty()) clause = join_literals(x, m, " & ") + " -> " + clause;
    if (!out.empty()) out += " & ";
    out += "(" + clause + ")";
  }
  return out;
}

}  // namespace setshare
