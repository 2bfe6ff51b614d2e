#include "defcol/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "defcol/cnf.hpp"
#include "defcol/colorer.hpp"
#include "defcol/corpus.hpp"
#include "defcol/cycles.hpp"
#include "defcol/error.hpp"
#include "defcol/graph_io.hpp"

namespace defcol::cli {

namespace {

using Clock = std::chrono::steady_clock;

void print(std::ostream& out, const json& j, const Common& c) { out << j.dump(c.indent) << '\n'; }

json error_json(const Error& e) {
  return json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

/// Input errors (exit 2) versus failed checks (exit 1).
bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency:
    case ErrorCode::DuplicateNeighbor:
    case ErrorCode::SelfLoop:
    case ErrorCode::UnknownVertex:
    case ErrorCode::Disconnected:
    case ErrorCode::NoEmbedding:
    case ErrorCode::NotPlanar:
    case ErrorCode::MalformedInput:
    case ErrorCode::InvalidParam:
    case ErrorCode::CycleRestrictionViolated:
    case ErrorCode::ContainsC4:
      return true;
    default:
      return false;
  }
}

/// Runs `task(i)` for i in [0, n) on up to `jobs` threads. Results are
/// written by index, so the output order never depends on scheduling.
void parallel_for(int n, int jobs, const std::function<void(int)>& task) {
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) task(i);
    });
  }
}

json graph_ref(const LoadedGraph& g) { return json{{"path", g.path}, {"digest", g.digest}}; }

// Text goes to `out` unless a file path is given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_output(path, text);
  }
}

// ---------------------------------------------------------------- gadgets

std::vector<int> default_lengths(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::H1:
    case GadgetFamily::H:
      return {1, 2, 3};
    case GadgetFamily::Fo:
    case GadgetFamily::Fe:
    case GadgetFamily::F:
    case GadgetFamily::Fprime:
      return {3, 5};
    default:
      return {};
  }
}

json verification_json(const VerificationReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  return json{{"claims", claims}, {"status", std::string(to_string(r.overall()))}};
}

VerifyOptions verify_options(const Common& c, int max_solved_D) {
  VerifyOptions o;
  o.solver = c.budget.solver();
  o.cycles = c.budget.cycles();
  o.max_solved_D = max_solved_D;
  return o;
}

// ----------------------------------------------------------- corpus audit

json structure_json(const StructureCheck& s) {
  return json{{"handshake", s.handshake},
              {"face_handshake", s.face_handshake},
              {"face_incidence", s.face_incidence},
              {"euler", s.euler}};
}

json audit_entry(const std::string& name, const PlaneGraph& g, const Common& c) {
  json j{{"name", name}, {"graph", graph_summary(g)}};
  bool ok = true;
  if (!g.has_embedding()) {
    j["status"] = "skipped";
    j["reason"] = "no embedding";
    return j;
  }
  const StructureCheck s = check_structure(g);
  j["structure"] = structure_json(s);
  ok = ok && s.ok();

  if (g.is_connected() && is_euler_certified(g)) {
    json sections = json::object();
    for (Section sec : {Section::Bal2, Section::Unbal2, Section::Unbal3}) {
      json sj;
      const ChargeLedger initial = initial_charges(g, sec);
      sj["initial_total"] = charge_json(initial.total_initial());
      sj["total_matches"] = initial.total_initial() == charge_spec(sec).expected_total();
      ok = ok && sj["total_matches"].get<bool>();
      try {
        if (g.num_vertices() < 2) throw Error(ErrorCode::InvalidParam, "fewer than two vertices");
        const AuditReport r = audit(g, sec);
        sj["conserved"] = r.conserved;
        sj["meta_claim_holds"] = r.meta_claim_holds;
        sj["configs"] = r.configs.size();
        sj["status"] = r.ok() ? "pass" : "fail";
        ok = ok && r.ok();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CycleRestrictionViolated && e.code() != ErrorCode::InvalidParam) throw;
        sj["status"] = "not-applicable";
        sj["reason"] = e.what();
      }
      sections[std::string(to_string(sec))] = sj;
    }
    j["discharging"] = sections;
  }

  if (!has_cycle_of_length(g, 4, c.budget.cycles())) {
    json cj;
    try {
      const Color55Result r = color55(g);
      cj["status"] = "pass";
      cj["violations"] = verify_coloring(g, r.coloring, ColorSpec({5, 5})).size();
    } catch (const Error& e) {
      cj["status"] = "fail";
      cj["error"] = error_json(e);
      ok = false;
    }
    j["color55"] = cj;
  }
  j["status"] = ok ? "pass" : "fail";
  return j;
}

}  // namespace

int run_gadget(const GadgetArgs& a, const Common& c, std::ostream& out) {
  const Gadget gadget = make_gadget(parse_family(a.family), a.D, a.l);
  const std::string rot = write_rotation(gadget.graph);
  if (a.out.empty() || a.out == "-") {
    out << rot;
    return kOk;
  }
  write_output(a.out, rot);

  json report = envelope("gadget");
  report["output"] = {{"path", a.out}, {"digest", crc32_digest(rot)}};
  report["graph"] = graph_summary(gadget.graph);
  report["descriptor"] = descriptor_json(gadget.descriptor);
  int code = kOk;
  if (a.verify) {
    const auto r = verify_descriptor(gadget.graph, gadget.descriptor, verify_options(c, a.max_solved_D));
    report["verification"] = verification_json(r);
    if (r.overall() == ClaimStatus::Fail) code = kCheckFailed;
  }
  write_output(a.out + ".json", report.dump(c.indent) + "\n");
  print(out, report, c);
  return code;
}

int run_check_cycles(const CheckCyclesArgs& a, const Common& c, std::ostream& out) {
  const ObstructionSet forbid = ObstructionSet::parse(a.forbid);
  json report = envelope("check-cycles");
  report["forbid"] = forbid.to_string();
  json results = json::array();
  int code = kOk;
  for (const auto& path : a.graphs) {
    const LoadedGraph g = load_graph(path);
    json r = graph_ref(g);
    try {
      json present = json::array();
      if (forbid.is_all_odd()) {
        if (!is_bipartite(g.graph)) present.push_back("odd");
      } else {
        for (int k : forbid.lengths()) {
          if (has_cycle_of_length(g.graph, k, c.budget.cycles())) present.push_back(k);
        }
      }
      r["present"] = present;
      r["status"] = present.empty() ? "pass" : "fail";
      if (!present.empty()) code = kCheckFailed;
      if (a.spectrum) r["spectrum"] = cycle_spectrum(g.graph, c.budget.cycles());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      r["status"] = "unverified-budget";
    }
    results.push_back(r);
  }
  report["results"] = results;
  print(out, report, c);
  return code;
}

int run_solve(const SolveArgs& a, const Common& c, std::ostream& out) {
  const ColorSpec spec = ColorSpec::parse(a.spec);
  if (a.expect && *a.expect != "feasible" && *a.expect != "infeasible") {
    throw Error(ErrorCode::InvalidParam, "--expect takes 'feasible' or 'infeasible'");
  }
  const LoadedGraph g = load_graph(a.graph);
  const SolveResult r = decide_colorable(g.graph, spec, c.budget.solver());

  json report = envelope("solve");
  report["graph"] = graph_ref(g);
  report["spec"] = spec.to_string();
  report["status"] = std::string(to_string(r.decision));
  report["nodes"] = r.nodes;
  if (r.coloring) report["coloring"] = coloring_json(*r.coloring);
  if (c.timings) report["millis"] = r.millis;

  int code = kOk;
  if (a.expect) {
    // An undecided search never confirms an expectation.
    const bool met = std::string(to_string(r.decision)) == *a.expect;
    report["expect"] = *a.expect;
    report["check"] = met ? "pass" : (r.decision == Decision::Unknown ? "unverified-budget" : "fail");
    if (!met) code = kCheckFailed;
  }
  emit(out, a.out, report.dump(c.indent) + "\n");
  return code;
}

int run_min_d(const MinDArgs& a, const Common& c, std::ostream& out) {
  const LoadedGraph g = load_graph(a.graph);
  json report = envelope("min-d");
  report["graph"] = graph_ref(g);
  report["k"] = a.k;
  const auto start = Clock::now();
  int code = kOk;
  try {
    report["D"] = min_unbalanced_defect(g.graph, a.k, c.budget.solver());
    report["status"] = "pass";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    report["status"] = "unverified-budget";
    report["error"] = error_json(e);
    code = kCheckFailed;
  }
  if (c.timings) report["millis"] = millis_since(start);
  print(out, report, c);
  return code;
}

int run_cnf(const CnfArgs& a, const Common&, std::ostream& out) {
  const ColorSpec spec = ColorSpec::parse(a.spec);
  const LoadedGraph g = load_graph(a.graph);
  emit(out, a.out, to_dimacs(export_cnf(g.graph, spec)));
  return kOk;
}

int run_discharge(const DischargeArgs& a, const Common& c, std::ostream& out) {
  const Section section = parse_section(a.section);
  json report = envelope("discharge");
  report["section"] = std::string(to_string(section));
  json results = json::array();
  std::ostringstream csv;
  csv << "graph,source,target,amount,rule\n";
  bool failed = false;
  bool rejected = false;
  for (const auto& path : a.graphs) {
    const LoadedGraph g = load_graph(path);
    json r = graph_ref(g);
    try {
      const AuditReport ar = audit(g.graph, section);
      json aj = audit_json(ar);
      if (!a.ledger) aj["ledger"].erase("transfers");
      r.update(aj);
      failed = failed || !ar.ok();
      for (const auto& t : ar.ledger.transfers) {
        csv << path << ',' << t.source.to_string() << ',' << t.target.to_string() << ','
            << to_string(t.amount) << ',' << t.rule << '\n';
      }
    } catch (const Error& e) {
      if (!is_input_error(e.code())) throw;
      r["status"] = "rejected";
      r["error"] = error_json(e);
      rejected = true;
    }
    results.push_back(r);
  }
  report["results"] = results;
  if (!a.csv.empty()) write_output(a.csv, csv.str());
  print(out, report, c);
  if (failed) return kCheckFailed;
  return rejected ? kUsage : kOk;
}

int run_color55(const Color55Args& a, const Common& c, std::ostream& out) {
  const LoadedGraph g = load_graph(a.graph);
  json report = envelope("color55");
  report["graph"] = graph_ref(g);
  const auto start = Clock::now();
  try {
    const Color55Result r = color55(g.graph, Color55Options{a.fallback_solver});
    json steps = json::object();
    for (const auto& [kind, n] : r.steps) steps[std::string(to_string(kind))] = n;
    report["status"] = "pass";
    report["steps"] = steps;
    report["fallback_uses"] = r.fallback_uses;
    const Coloring& coloring = r.coloring;
    if (a.out.empty()) {
      report["coloring"] = coloring_json(coloring);
    } else {
      write_output(a.out, coloring_json(coloring).dump(c.indent) + "\n");
      report["coloring_path"] = a.out;
    }
  } catch (const IrreducibleGraphError& e) {
    report["status"] = "fail";
    report["error"] = error_json(e);
    report["irreducible_graph"] = write_rotation(e.graph());
    print(out, report, c);
    return kCheckFailed;
  }
  if (c.timings) report["millis"] = millis_since(start);
  print(out, report, c);
  return kOk;
}

int run_verify_gadget(const VerifyGadgetArgs& a, const Common& c, std::ostream& out) {
  struct Job {
    GadgetFamily family;
    int D;
    std::optional<int> l;
  };
  std::vector<GadgetFamily> families;
  if (a.all) {
    families = {GadgetFamily::H2, GadgetFamily::H1, GadgetFamily::H,  GadgetFamily::F1,
                GadgetFamily::Fo, GadgetFamily::Fe, GadgetFamily::F,  GadgetFamily::Fprime,
                GadgetFamily::T0, GadgetFamily::T,  GadgetFamily::X0, GadgetFamily::X};
  } else {
    for (const auto& name : a.families) families.push_back(parse_family(name));
  }
  if (families.empty()) throw Error(ErrorCode::InvalidParam, "name a gadget family or pass --all");

  std::vector<Job> jobs;
  for (GadgetFamily f : families) {
    std::vector<int> Ds;
    if (a.all) {
      for (int D = 0; D <= a.max_D; ++D) Ds.push_back(D);
    } else {
      Ds.push_back(a.D);
    }
    for (int D : Ds) {
      if (!uses_length(f)) {
        jobs.push_back({f, D, std::nullopt});
      } else if (a.l && !a.all) {
        jobs.push_back({f, D, a.l});
      } else {
        for (int l : default_lengths(f)) jobs.push_back({f, D, l});
      }
    }
  }

  const VerifyOptions options = verify_options(c, a.max_solved_D);
  std::vector<json> results(jobs.size());
  std::vector<ClaimStatus> status(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), c.jobs, [&](int i) {
    const Job& job = jobs[i];
    const Gadget g = make_gadget(job.family, job.D, job.l);
    const auto r = verify_descriptor(g.graph, g.descriptor, options);
    json j{{"descriptor", descriptor_json(g.descriptor)}, {"graph", graph_summary(g.graph)}};
    j.update(verification_json(r));
    results[i] = std::move(j);
    status[i] = r.overall();
  });

  json report = envelope("verify-gadget");
  report["results"] = results;
  const bool any_fail = std::ranges::count(status, ClaimStatus::Fail) > 0;
  report["status"] = any_fail ? "fail" : "pass";
  print(out, report, c);
  return any_fail ? kCheckFailed : kOk;
}

int run_corpus_audit(const CorpusAuditArgs& a, const Common& c, std::ostream& out) {
  std::vector<corpus::Entry> entries;
  json report = envelope("corpus-audit");
  if (a.graphs.empty()) {
    entries = corpus::standard_corpus(a.seed);
    for (auto& e : corpus::c4_free_corpus(a.seed, a.c4_free_count)) {
      entries.push_back({"c4-free/" + e.name, std::move(e.graph)});
    }
    report["source"] = {{"builtin", true}, {"seed", a.seed}, {"c4_free_count", a.c4_free_count}};
  } else {
    for (const auto& path : a.graphs) {
      LoadedGraph g = load_graph(path);
      entries.push_back({path, std::move(g.graph)});
    }
    report["source"] = {{"builtin", false}};
  }

  const auto start = Clock::now();
  std::vector<json> results(entries.size());
  parallel_for(static_cast<int>(entries.size()), c.jobs, [&](int i) {
    try {
      results[i] = audit_entry(entries[i].name, entries[i].graph, c);
    } catch (const Error& e) {
      results[i] = json{{"name", entries[i].name}, {"status", "fail"}, {"error", error_json(e)}};
    }
  });

  int failures = 0;
  for (const auto& r : results) failures += r["status"] == "fail" ? 1 : 0;
  report["results"] = results;
  report["graphs"] = results.size();
  report["failures"] = failures;
  report["status"] = failures == 0 ? "pass" : "fail";
  if (c.timings) report["millis"] = millis_since(start);
  print(out, report, c);
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace defcol::cli
