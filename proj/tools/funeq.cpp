#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "funeq/error.hpp"
#include "funeq/expr.hpp"
#include "funeq/oracle.hpp"
#include "funeq/problem_file.hpp"
#include "funeq/report.hpp"
#include "funeq/solver_additive.hpp"
#include "funeq/solver_higher.hpp"

namespace {

using namespace funeq;

constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoParticular = 2;

struct Options {
  std::string input;
  std::string candidate;
  std::string mode;
  std::vector<int> bounds;
  int sweep = -1;
  int root_cap = -1;
  std::string format = "text";
  bool quiet = false;
};

void apply_overrides(ProblemSpec& spec, const Options& opt) {
  if (!opt.mode.empty()) {
    if (opt.mode == "alpha")
      spec.mode = Mode::alpha_only;
    else if (opt.mode == "beta")
      spec.mode = Mode::beta_only;
    else if (opt.mode == "full")
      spec.mode = Mode::full;
    else
      throw FuneqError("mode: expected alpha, beta or full");
  }
  if (!opt.bounds.empty()) {
    if (spec.p == 1)
      spec.bounds = opt.bounds;
    else
      spec.factor_bounds = opt.bounds;
  }
  if (opt.root_cap >= 0) spec.root_degree_cap = opt.root_cap;
  spec.validate();
}

ReportFormat format_of(const Options& opt) {
  if (opt.format == "machine") return ReportFormat::machine;
  if (opt.format == "text") return ReportFormat::text;
  throw FuneqError("format: expected text or machine");
}

void print(const Options& opt, const std::string& text) {
  if (!opt.quiet) std::cout << text;
}

int run_solve(const Options& opt) {
  ProblemSpec spec = load_problem(opt.input);
  apply_overrides(spec, opt);
  ReportFormat fmt = format_of(opt);

  if (spec.p >= 2) {
    auto shortcut = identity_shortcut_p(spec);
    std::optional<ProductConditionsDeg1> deg1;
    if (spec.tower->k() == 1 && spec.mode != Mode::full && spec.p == 2)
      deg1 = build_product_conditions_deg1(spec, spec.factor_bounds);
    print(opt, emit_higher_report(spec, shortcut, deg1 ? &*deg1 : nullptr, fmt));
    bool solved = shortcut.has_value() || (deg1 && deg1->feasible);
    return solved ? kExitSolved : kExitNoParticular;
  }

  if (opt.sweep >= 0) {
    std::optional<SolutionSpace> success;
    MultiIndex success_bounds;
    std::string summary;
    for (int j = 0; j <= opt.sweep && !success; ++j) {
      spec.bounds.assign(spec.tower->k(), j);
      SolutionSpace out = solve_additive(spec);
      summary += "sweep J=" + std::to_string(j) + ": " +
                 (out.particular ? "particular found" : "no particular") + ", kernel dimension " +
                 std::to_string(out.kernel.size()) + "\n";
      if (out.particular) {
        success = std::move(out);
        success_bounds = spec.bounds;
      }
    }
    if (fmt == ReportFormat::text) print(opt, summary);
    if (!success) return kExitNoParticular;
    spec.bounds = success_bounds;
    print(opt, emit_report(*success, spec, fmt));
    return kExitSolved;
  }

  SolutionSpace out = solve_additive(spec);
  print(opt, emit_report(out, spec, fmt));
  return out.particular ? kExitSolved : kExitNoParticular;
}

int run_automorphisms(const Options& opt) {
  ProblemSpec spec = load_problem(opt.input);
  apply_overrides(spec, opt);
  ReportFormat fmt = format_of(opt);
  CharEquationResult ceq = char_equation(spec);
  std::ostringstream out;
  if (!ceq.equation) {
    if (fmt == ReportFormat::machine)
      out << "funeq-report: 1\nautomorphisms.refused: " << ceq.note << "\n";
    else
      out << "characteristic equation refused: " << ceq.note << "\n";
    print(opt, out.str());
    return kExitNoParticular;
  }
  RootSearchResult roots = find_roots_monomial(*ceq.equation, spec, spec.root_degree_cap);
  if (fmt == ReportFormat::machine) {
    out << "funeq-report: 1\n";
    out << "char-equation: " << ceq.equation->to_string() << "\n";
    out << "actions.count: " << roots.actions.size() << "\n";
    for (size_t i = 0; i < roots.actions.size(); ++i)
      out << "action[" << i << "]: " << roots.actions[i].key() << "\n";
    for (size_t i = 0; i < roots.notes.size(); ++i)
      out << "note[" << i << "]: " << roots.notes[i] << "\n";
  } else {
    out << "characteristic equation: " << ceq.equation->to_string() << " = 0\n";
    out << "monomial actions (" << roots.actions.size() << "):\n";
    for (const auto& a : roots.actions) out << "  " << a.key() << "\n";
    for (const auto& n : roots.notes) out << "note: " << n << "\n";
  }
  print(opt, out.str());
  return roots.actions.empty() ? kExitNoParticular : kExitSolved;
}

int run_verify(const Options& opt, bool profile_only) {
  ProblemSpec spec = load_problem(opt.input);
  apply_overrides(spec, opt);
  if (opt.candidate.empty()) throw FuneqError("--candidate is required");
  CandidateSolution cand = load_candidate(opt.candidate, spec);
  ReportFormat fmt = format_of(opt);

  std::ostringstream out;
  bool pass = true;
  FieldElement expected =
      cand.sigma.is_identity() ? cand.c_tilde : spec.tower->zero();
  if (!cand.sigma.is_identity() && !cand.c_tilde.is_zero()) {
    out << "note: a non-identity action only solves the homogeneous equation; "
           "checking against c-tilde = 0\n";
  }
  for (Side side : spec.sides()) {
    ResidualProfile prof = residual_profile(cand.sigma, cand.op, spec, side);
    bool side_ok = prof.matches(expected);
    pass = pass && side_ok;
    std::string tag = side == Side::alpha ? "alpha" : "beta";
    if (fmt == ReportFormat::machine) {
      for (const auto& [m, v] : prof.lambda) {
        out << "lambda." << tag << "[";
        for (size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
        out << "]: " << print_element(v) << "\n";
      }
      out << "side." << tag << ": " << (side_ok ? "pass" : "fail") << "\n";
    } else {
      out << "residual profile (" << tag << "):\n";
      for (const auto& [m, v] : prof.lambda) {
        out << "  lambda[";
        for (size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
        out << "] = " << print_element(v) << "\n";
      }
      out << "  " << (side_ok ? "matches" : "does not match") << " the advertised constant "
          << print_element(expected) << "\n";
    }
  }
  if (!profile_only && pass && spec.mode == Mode::full)
    pass = grid_check_full(cand.sigma, cand.op, cand.c_tilde, spec, 4);
  if (fmt == ReportFormat::machine)
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
  else
    out << (pass ? "verification passed" : "verification failed") << "\n";
  print(opt, out.str());
  return pass ? kExitSolved : kExitNoParticular;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for inhomogeneous linear functional equations over "
               "finitely generated fields"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_candidate) {
    cmd->add_option("--input", opt.input, "problem file")->required();
    if (with_candidate)
      cmd->add_option("--candidate", opt.candidate, "candidate solution file")->required();
    cmd->add_option("--mode", opt.mode, "alpha|beta|full");
    cmd->add_option("--bounds", opt.bounds, "operator bounds j1,..,jk (factor bounds for p >= 2)")
        ->delimiter(',');
    cmd->add_option("--root-degree-cap", opt.root_cap, "monomial ansatz exponent cap");
    cmd->add_option("--format", opt.format, "text|machine");
    cmd->add_flag("--quiet", opt.quiet, "suppress the report body");
  };

  CLI::App* solve = app.add_subcommand("solve", "full pipeline");
  add_common(solve, false);
  solve->add_option("--sweep-J", opt.sweep, "try bounds 0..N, report the first success");

  CLI::App* autos = app.add_subcommand("automorphisms", "characteristic equation + root search");
  add_common(autos, false);

  CLI::App* verify = app.add_subcommand("verify", "check a candidate solution file");
  add_common(verify, true);

  CLI::App* oracle = app.add_subcommand("oracle-check", "residual profile of a candidate");
  add_common(oracle, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(opt);
    if (autos->parsed()) return run_automorphisms(opt);
    if (verify->parsed()) return run_verify(opt, /*profile_only=*/false);
    if (oracle->parsed()) return run_verify(opt, /*profile_only=*/true);
  } catch (const FuneqError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
