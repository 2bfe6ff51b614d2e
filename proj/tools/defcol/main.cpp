#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "defcol/commands.hpp"
#include "defcol/error.hpp"

namespace {

using namespace defcol::cli;

void add_common(CLI::App* app, Common& c) {
  app->add_option("--nodes", c.budget.nodes, "Search node budget (env DEFCOL_MAX_NODES)");
  app->add_option("--seconds", c.budget.seconds, "Search time budget (env DEFCOL_MAX_SECONDS)");
  app->add_flag("--timings", c.timings, "Include wall-clock timings (makes output nondeterministic)");
  app->add_option("--indent", c.indent, "JSON indentation, -1 for compact")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defective colouring of plane graphs: gadgets, exact solving, discharging audits."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "defcol 0.1.0");

  Common common;
  int code = kOk;

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Generate a gadget as a rotation file");
  gadget_cmd->add_option("family", gadget.family, "H2 H1 H F1 Fo Fe F Fprime T0 T X0 X")->required();
  gadget_cmd->add_option("--D", gadget.D, "Defect parameter")->required()->check(CLI::NonNegativeNumber);
  gadget_cmd->add_option("--l", gadget.l, "Cycle length parameter (H and F families)");
  gadget_cmd->add_option("--out", gadget.out, "Rotation file; a <out>.json sidecar holds the claims");
  gadget_cmd->add_flag("!--no-verify", gadget.verify, "Skip claim verification for the sidecar");
  gadget_cmd->add_option("--max-solved-D", gadget.max_solved_D, "Run the solver only up to this D")
      ->capture_default_str();
  add_common(gadget_cmd, common);
  gadget_cmd->callback([&] { code = run_gadget(gadget, common, std::cout); });

  CheckCyclesArgs cycles;
  auto* cycles_cmd = app.add_subcommand("check-cycles", "Check graphs against forbidden cycle lengths");
  cycles_cmd->add_option("--forbid", cycles.forbid, "Comma-separated lengths, or 'odd'")->required();
  cycles_cmd->add_option("graphs", cycles.graphs, "Graph files ('-' for stdin)")->required();
  cycles_cmd->add_flag("--spectrum", cycles.spectrum, "Also report every cycle length present");
  add_common(cycles_cmd, common);
  cycles_cmd->callback([&] { code = run_check_cycles(cycles, common, std::cout); });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide (d1,...,dk)-colourability exactly");
  solve_cmd->add_option("--spec", solve.spec, "Defect caps d1,...,dk")->required();
  solve_cmd->add_option("graph", solve.graph, "Graph file ('-' for stdin)")->capture_default_str();
  solve_cmd->add_option("--expect", solve.expect, "Exit 1 unless the decision matches")
      ->check(CLI::IsMember({"feasible", "infeasible"}));
  solve_cmd->add_option("--out", solve.out, "Report file instead of stdout");
  add_common(solve_cmd, common);
  solve_cmd->callback([&] { code = run_solve(solve, common, std::cout); });

  MinDArgs mind;
  auto* mind_cmd = app.add_subcommand("min-d", "Least D with the graph (0,...,0,D)-colourable");
  mind_cmd->add_option("--k", mind.k, "Number of classes")->capture_default_str()->check(CLI::PositiveNumber);
  mind_cmd->add_option("graph", mind.graph, "Graph file ('-' for stdin)")->capture_default_str();
  add_common(mind_cmd, common);
  mind_cmd->callback([&] { code = run_min_d(mind, common, std::cout); });

  CnfArgs cnf;
  auto* cnf_cmd = app.add_subcommand("cnf", "Export the colouring problem as DIMACS CNF");
  cnf_cmd->add_option("--spec", cnf.spec, "Defect caps d1,...,dk")->required();
  cnf_cmd->add_option("graph", cnf.graph, "Graph file ('-' for stdin)")->capture_default_str();
  cnf_cmd->add_option("--out", cnf.out, "CNF file instead of stdout");
  add_common(cnf_cmd, common);
  cnf_cmd->callback([&] { code = run_cnf(cnf, common, std::cout); });

  DischargeArgs discharge;
  auto* discharge_cmd = app.add_subcommand("discharge", "Run a discharging system and audit the result");
  discharge_cmd->add_option("--section", discharge.section, "bal2, unbal2 or unbal3")
      ->required()
      ->check(CLI::IsMember({"bal2", "unbal2", "unbal3"}));
  discharge_cmd->add_option("graphs", discharge.graphs, "Rotation files")->required();
  discharge_cmd->add_option("--csv", discharge.csv, "Write every transfer to a CSV file");
  discharge_cmd->add_flag("--ledger", discharge.ledger, "Include the transfer list in the JSON report");
  add_common(discharge_cmd, common);
  discharge_cmd->callback([&] { code = run_discharge(discharge, common, std::cout); });

  Color55Args color;
  auto* color_cmd = app.add_subcommand("color55", "(5,5)-colour a C4-free plane graph by reductions");
  color_cmd->add_option("graph", color.graph, "Rotation file ('-' for stdin)")->capture_default_str();
  color_cmd->add_flag("--fallback-solver", color.fallback_solver,
                      "Colour irreducible remainders with the exact solver");
  color_cmd->add_option("--out", color.out, "Write the colouring {vertex: class} to this file");
  add_common(color_cmd, common);
  color_cmd->callback([&] { code = run_color55(color, common, std::cout); });

  VerifyGadgetArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-gadget", "Check a gadget's size, embedding, spectrum and infeasibility");
  verify_cmd->add_option("families", verify.families, "Gadget families");
  verify_cmd->add_option("--D", verify.D, "Defect parameter")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--l", verify.l, "Cycle length parameter; default runs the standard lengths");
  verify_cmd->add_flag("--all", verify.all, "Every family for D = 0..--max-D");
  verify_cmd->add_option("--max-D", verify.max_D, "Largest D with --all")->capture_default_str();
  verify_cmd->add_option("--max-solved-D", verify.max_solved_D, "Run the solver only up to this D")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(verify_cmd, common);
  verify_cmd->callback([&] { code = run_verify_gadget(verify, common, std::cout); });

  CorpusAuditArgs audit;
  auto* audit_cmd = app.add_subcommand("corpus-audit", "Structural, discharging and colouring checks over a corpus");
  audit_cmd->add_option("graphs", audit.graphs, "Rotation files; the built-in corpus when omitted");
  audit_cmd->add_option("--seed", audit.seed, "Seed of the built-in corpus")->capture_default_str();
  audit_cmd->add_option("--count", audit.c4_free_count, "Size of the built-in C4-free corpus")
      ->capture_default_str();
  audit_cmd->add_option("--jobs", common.jobs, "Worker threads (0 = hardware concurrency)");
  add_common(audit_cmd, common);
  audit_cmd->callback([&] {
    if (common.jobs <= 0) common.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    code = run_corpus_audit(audit, common, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const defcol::ParseError& e) {
    std::cerr << "defcol: " << e.what() << " (line " << e.line() << ", column " << e.column() << ")\n";
    return kUsage;
  } catch (const defcol::Error& e) {
    std::cerr << "defcol: " << e.what() << '\n';
    switch (e.code()) {
      case defcol::ErrorCode::BudgetExceeded:
      case defcol::ErrorCode::IrreducibleGraph:
      case defcol::ErrorCode::InvariantViolated:
      case defcol::ErrorCode::ExtensionWitnessMissing:
      case defcol::ErrorCode::GroupingConflict:
        return kCheckFailed;
      default:
        return kUsage;
    }
  }
  return code;
}
