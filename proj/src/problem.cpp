#include "setshare/problem.hpp"

#include <map>
#include <sstream>

#include "lexer.hpp"
#include "setshare/error.hpp"

namespace setshare {

namespace {

using detail::Lexer;
using detail::TokenKind;

Term parse_term_tokens(Lexer& lex) {
  if (lex.peek().kind != TokenKind::kIdent) lex.fail("expected a term, found " + lex.found());
  std::string name = lex.next().text;
  if (!lex.accept(TokenKind::kLParen)) return Term::variable(std::move(name));
  std::vector<Term> args;
  if (!lex.accept(TokenKind::kRParen)) {
    do {
      args.push_back(parse_term_tokens(lex));
    } while (lex.accept(TokenKind::kComma));
    lex.expect(TokenKind::kRParen);
  }
  return Term::compound(std::move(name), std::move(args));
}

struct Located {
  std::size_t line = 0;
};

struct RawEquation : Located {
  Equation equation;
};

struct RawNames : Located {
  std::vector<std::pair<std::string, std::size_t>> names;  // name, column
};

struct RawGroups : Located {
  std::vector<RawNames> groups;
};

struct RawFormula : Located {
  FormulaExpr expr;
};

// Syntax-only view of a problem file; names are resolved afterwards so that
// any syntax error wins over semantic ones.
struct RawProblem {
  std::optional<RawNames> vars;
  std::optional<RawGroups> sharing;
  std::optional<RawNames> free;
  std::optional<RawNames> lin;
  std::optional<RawFormula> pos;
  std::vector<RawEquation> equations;
  std::vector<RawEquation> context;
};

RawNames parse_names(Lexer& lex) {
  RawNames out;
  out.line = lex.line();
  while (lex.peek().kind == TokenKind::kIdent) {
    const auto& t = lex.peek();
    out.names.emplace_back(t.text, t.column);
    lex.next();
  }
  if (lex.peek().kind != TokenKind::kEnd) lex.fail("expected a variable name, found " + lex.found());
  return out;
}

RawGroups parse_groups(Lexer& lex) {
  RawGroups out;
  out.line = lex.line();
  while (lex.accept(TokenKind::kLBrace)) {
    RawNames group;
    group.line = lex.line();
    if (!lex.accept(TokenKind::kRBrace)) {
      do {
        const std::size_t column = lex.peek().column;
        group.names.emplace_back(lex.expect(TokenKind::kIdent).text, column);
      } while (lex.accept(TokenKind::kComma));
      lex.expect(TokenKind::kRBrace);
    }
    out.groups.push_back(std::move(group));
  }
  if (lex.peek().kind != TokenKind::kEnd) lex.fail("expected '{', found " + lex.found());
  return out;
}

RawEquation parse_equation(Lexer& lex) {
  const std::size_t line = lex.line();
  Term lhs = parse_term_tokens(lex);
  lex.expect(TokenKind::kEquals);
  Term rhs = parse_term_tokens(lex);
  if (lex.peek().kind != TokenKind::kEnd) lex.fail("unexpected " + lex.found() + " after equation");
  return RawEquation{{line}, Equation{std::move(lhs), std::move(rhs)}};
}

RawProblem parse_raw(std::string_view text) {
  RawProblem raw;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Lexer lex(line, line_no);
    if (lex.peek().kind == TokenKind::kEnd) continue;
    if (lex.peek().kind != TokenKind::kIdent) lex.fail("expected a section keyword, found " + lex.found());
    const detail::Token keyword = lex.next();
    const std::string& kw = keyword.text;

    if (!raw.vars && kw != "vars") {
      throw ParseError("the first section must be 'vars', found '" + kw + "'", line_no, keyword.column);
    }
    auto once = [&](bool seen) {
      if (seen) throw ParseError("section '" + kw + "' appears twice", line_no, keyword.column);
    };

    if (kw == "vars") {
      once(raw.vars.has_value());
      raw.vars = parse_names(lex);
    } else if (kw == "sharing") {
      once(raw.sharing.has_value());
      raw.sharing = parse_groups(lex);
    } else if (kw == "free") {
      once(raw.free.has_value());
      raw.free = parse_names(lex);
    } else if (kw == "lin") {
      once(raw.lin.has_value());
      raw.lin = parse_names(lex);
    } else if (kw == "pos") {
      once(raw.pos.has_value());
      const std::size_t offset = lex.peek().column - 1;
      RawFormula f;
      f.line = line_no;
      f.expr = parse_formula(line.substr(std::min(offset, line.size())), line_no, offset);
      raw.pos = std::move(f);
    } else if (kw == "eq") {
      raw.equations.push_back(parse_equation(lex));
    } else if (kw == "given") {
      raw.context.push_back(parse_equation(lex));
    } else {
      throw ParseError("unknown section '" + kw + "'", line_no, keyword.column);
    }
  }
  if (!raw.vars) throw ParseError("missing 'vars' section", 0, 0);
  return raw;
}

[[noreturn]] void semantic(std::size_t line, const std::string& message) {
  throw SemanticError("line " + std::to_string(line) + ": " + message);
}

VarSet resolve(const RawNames& names, const VariableUniverse& universe) {
  VarSet out;
  for (const auto& [name, column] : names.names) {
    auto i = universe.index_of(name);
    if (!i) semantic(names.line, "undeclared variable '" + name + "' (column " + std::to_string(column) + ")");
    out.insert(*i);
  }
  return out;
}

EquationSet resolve(const std::vector<RawEquation>& raw, const VariableUniverse& universe) {
  EquationSet out;
  for (const auto& r : raw) {
    for (const auto& v : vars(EquationSet{r.equation})) {
      if (!universe.contains(v)) semantic(r.line, "undeclared variable '" + v + "' in equation");
    }
    out.push_back(r.equation);
  }
  return out;
}

}  // namespace

AnalysisProblem parse_problem(std::string_view text) {
  const RawProblem raw = parse_raw(text);

  std::vector<std::string> names;
  for (const auto& [name, column] : raw.vars->names) {
    if (name == "true") semantic(raw.vars->line, "'true' is reserved and cannot name a variable");
    names.push_back(name);
  }
  VariableUniverse universe = [&] {
    try {
      return VariableUniverse(std::move(names));
    } catch (const SemanticError& e) {
      semantic(raw.vars->line, e.what());
    }
  }();

  std::vector<VarSet> groups;
  if (raw.sharing) {
    for (const auto& g : raw.sharing->groups) groups.push_back(resolve(g, universe));
  }
  const VarSet free = raw.free ? resolve(*raw.free, universe) : VarSet{};
  const VarSet lin = raw.lin ? resolve(*raw.lin, universe) : VarSet{};

  std::optional<PosFormula> groundness;
  if (raw.pos) {
    try {
      groundness = make_formula(raw.pos->expr, universe);
    } catch (const NotPositiveError& e) {
      throw NotPositiveError("line " + std::to_string(raw.pos->line) + ": " + e.what());
    } catch (const SemanticError& e) {
      semantic(raw.pos->line, e.what());
    }
  }

  EquationSet equations = resolve(raw.equations, universe);
  EquationSet context = resolve(raw.context, universe);
  SharingTriple initial(universe, GroupSet(std::move(groups)), free, lin);
  return AnalysisProblem{std::move(universe), std::move(initial), std::move(groundness),
                         std::move(equations), std::move(context)};
}

std::string print_triple(const SharingTriple& triple) {
  const VariableUniverse& x = triple.universe();
  auto line = [](const std::string& kw, const std::string& body) {
    return body.empty() ? kw + "\n" : kw + " " + body + "\n";
  };
  return line("vars", x.format_list(x.all())) + line("sharing", format_groups(triple.sharing(), x)) +
         line("free", x.format_list(triple.free())) + line("lin", x.format_list(triple.linear()));
}

std::string print_problem(const AnalysisProblem& problem) {
  std::string out = print_triple(problem.initial);
  if (problem.groundness) out += "pos " + to_string(*problem.groundness) + "\n";
  for (const auto& e : problem.equations) out += "eq " + to_string(e) + "\n";
  for (const auto& e : problem.context) out += "given " + to_string(e) + "\n";
  return out;
}

Term parse_term(std::string_view text, const VariableUniverse& universe) {
  Lexer lex(text, 1);
  Term t = parse_term_tokens(lex);
  if (lex.peek().kind != TokenKind::kEnd) lex.fail("unexpected " + lex.found() + " after term");
  for (const auto& v : vars(t)) {
    if (!universe.contains(v)) throw SemanticError("undeclared variable '" + v + "'");
  }
  return t;
}

}  // namespace setshare
