#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "defcol/report.hpp"

namespace defcol::cli {

/// Flags common to every subcommand.
struct Common {
  BudgetFlags budget;
  bool timings = false;
  int indent = 2;
  int jobs = 1;
};

struct GadgetArgs {
  std::string family;
  int D = 0;
  std::optional<int> l;
  std::string out;  // rotation file; stdout when empty
  bool verify = true;
  int max_solved_D = 1;
};

struct CheckCyclesArgs {
  std::string forbid;
  std::vector<std::string> graphs;
  bool spectrum = false;
};

struct SolveArgs {
  std::string spec;
  std::string graph = "-";
  std::optional<std::string> expect;  // "feasible" or "infeasible"
  std::string out;
};

struct MinDArgs {
  int k = 2;
  std::string graph = "-";
};

struct CnfArgs {
  std::string spec;
  std::string graph = "-";
  std::string out;
};

struct DischargeArgs {
  std::string section;
  std::vector<std::string> graphs;
  std::string csv;
  bool ledger = false;
};

struct Color55Args {
  std::string graph = "-";
  bool fallback_solver = false;
  std::string out;
};

struct VerifyGadgetArgs {
  std::vector<std::string> families;
  int D = 0;
  std::optional<int> l;
  bool all = false;
  int max_D = 1;
  int max_solved_D = 1;
};

struct CorpusAuditArgs {
  std::vector<std::string> graphs;
  std::uint64_t seed = 1;
  int c4_free_count = 100;
};

// Each command prints its JSON report on `out` and returns an exit code.
int run_gadget(const GadgetArgs& a, const Common& c, std::ostream& out);
int run_check_cycles(const CheckCyclesArgs& a, const Common& c, std::ostream& out);
int run_solve(const SolveArgs& a, const Common& c, std::ostream& out);
int run_min_d(const MinDArgs& a, const Common& c, std::ostream& out);
int run_cnf(const CnfArgs& a, const Common& c, std::ostream& out);
int run_discharge(const DischargeArgs& a, const Common& c, std::ostream& out);
int run_color55(const Color55Args& a, const Common& c, std::ostream& out);
int run_verify_gadget(const VerifyGadgetArgs& a, const Common& c, std::ostream& out);
int run_corpus_audit(const CorpusAuditArgs& a, const Common& c, std::ostream& out);

}  // namespace defcol::cli
