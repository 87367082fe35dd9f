#include "setshare/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "setshare/amgu.hpp"
#include "setshare/error.hpp"
#include "setshare/harness.hpp"
#include "setshare/problem.hpp"

namespace setshare {

namespace {

struct AnalysisFlags {
  std::string file;
  std::string algo = "3";
  bool no_early_prune = false;
  bool trade_efficiency = false;
  std::string order = "given";
  std::size_t file_bound = 16;

  AmguConfig config() const {
    AmguConfig c;
    c.algorithm = *parse_algorithm(algo);
    c.early_prune = !no_early_prune;
    c.trade_efficiency = trade_efficiency;
    c.order = order == "ground-first" ? EquationOrder::kGroundFirst : EquationOrder::kGiven;
    c.file_bound = file_bound;
    return c;
  }
};

void add_analysis_flags(CLI::App& cmd, AnalysisFlags& flags) {
  cmd.add_option("file", flags.file, "problem file")->required();
  cmd.add_option("--algo", flags.algo, "abstract unification algorithm")
      ->check(CLI::IsMember({"1", "2", "3", "file"}))
      ->capture_default_str();
  cmd.add_flag("--no-early-prune", flags.no_early_prune, "skip groundness pruning before unification");
  cmd.add_flag("--trade-efficiency", flags.trade_efficiency,
               "one closure instead of two when both sides are linear");
  cmd.add_option("--order", flags.order, "equation order")
      ->check(CLI::IsMember({"given", "ground-first"}))
      ->capture_default_str();
  cmd.add_option("--file-bound", flags.file_bound, "largest |S| accepted by the Filé decomposition")
      ->capture_default_str();
}

AnalysisProblem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string commented(const std::string& text) {
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  return out;
}

int cmd_analyze(const AnalysisFlags& flags, std::ostream& out) {
  const AnalysisProblem problem = load(flags.file);
  const AmguConfig config = flags.config();
  const AnalysisResult r = analyze(problem, config);
  if (r.pruned) out << "# pruned\n" << commented(print_triple(*r.pruned));
  out << print_triple(r.result);
  out << "# groups " << r.result.sharing().size() << "\n";
  out << "# algorithm " << to_string(config.algorithm) << "\n";
  return kExitOk;
}

std::string relation(const GroupSet& a, const GroupSet& b) {
  if (a == b) return "=";
  if (a.subset_of(b)) return "<";
  if (b.subset_of(a)) return ">";
  return "<>";
}

int cmd_compare(const AnalysisFlags& flags, std::ostream& out) {
  const AnalysisProblem problem = load(flags.file);
  AmguConfig config = flags.config();

  std::vector<std::pair<std::string, SharingTriple>> rows;
  for (Algorithm algo : {Algorithm::kAmgu1, Algorithm::kAmgu2, Algorithm::kAmgu3, Algorithm::kFileReference}) {
    config.algorithm = algo;
    try {
      rows.emplace_back(to_string(algo), analyze(problem, config).result);
    } catch (const LimitError& e) {
      out << to_string(algo) << " skipped: " << e.what() << "\n";
    }
  }

  const VariableUniverse& x = problem.universe;
  auto list = [&](VarSet v) { return v.empty() ? std::string() : " " + x.format_list(v); };
  for (const auto& [name, t] : rows) {
    out << name << " groups " << t.sharing().size() << " | sharing " << format_groups(t.sharing(), x)
        << " | free" << list(t.free()) << " | lin" << list(t.linear()) << "\n";
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      out << rows[j].first << " " << relation(rows[j].second.sharing(), rows[i].second.sharing()) << " "
          << rows[i].first << "\n";
    }
  }
  return kExitOk;
}

int cmd_oracle(const OracleConfig& config, const std::string& replay, std::ostream& out) {
  OracleReport report;
  if (!replay.empty()) {
    report.trials = 1;
    check_instance(load(replay), config, 0, report);
  } else {
    report = run_oracle(config);
  }
  for (const Counterexample& c : report.counterexamples) out << format_counterexample(c) << "\n";
  std::size_t checks = 0;
  for (const auto& [property, n] : report.checks) {
    out << "# " << property << " " << n << "\n";
    checks += n;
  }
  out << report.trials << " trials, " << checks << " checks\n";
  out << report.counterexamples.size() << " counterexamples\n";
  return report.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Set-sharing analysis with freeness and linearity", "setshare");
  app.require_subcommand(1);

  AnalysisFlags analyze_flags;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "abstractly unify the equations of a problem file");
  add_analysis_flags(*analyze_cmd, analyze_flags);

  AnalysisFlags compare_flags;
  CLI::App* compare_cmd = app.add_subcommand("compare", "run every algorithm on a problem file");
  add_analysis_flags(*compare_cmd, compare_flags);

  OracleConfig oracle_config;
  std::string replay;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "check the algorithms against the concrete semantics");
  oracle_cmd->add_option("--seed", oracle_config.seed)->capture_default_str();
  oracle_cmd->add_option("--trials", oracle_config.trials)->capture_default_str();
  oracle_cmd->add_option("--max-vars", oracle_config.max_vars)
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  oracle_cmd->add_option("--max-depth", oracle_config.max_depth)->capture_default_str();
  oracle_cmd->add_option("--max-eqs", oracle_config.max_eqs)->capture_default_str();
  oracle_cmd->add_option("--file-bound", oracle_config.file_bound)->capture_default_str();
  oracle_cmd->add_option("--replay", replay, "check a single problem file, e.g. a printed counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "setshare: " << e.what() << "\n";
    return kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*analyze_cmd) {
      code = cmd_analyze(analyze_flags, out);
    } else if (*compare_cmd) {
      code = cmd_compare(compare_flags, out);
    } else {
      code = cmd_oracle(oracle_config, replay, out);
    }
  } catch (const ParseError& e) {
    err << "setshare: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "setshare: " << e.what() << "\n";
    return kExitSemantic;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  err << "# elapsed " << elapsed.count() << " ms\n";
  return code;
}

}  // namespace setshare
