#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "defcol/coloring.hpp"
#include "defcol/cycles.hpp"
#include "defcol/discharging.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/plane_graph.hpp"
#include "defcol/solver.hpp"

namespace defcol::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "defcol.report/1";

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Search limits. Unset fields fall back to DEFCOL_MAX_NODES and
/// DEFCOL_MAX_SECONDS, then to the desk-scale defaults below.
struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;

  static constexpr std::uint64_t kDefaultNodes = 200'000'000;
  static constexpr double kDefaultSeconds = 60.0;

  SearchBudget solver() const;
  CycleBudget cycles() const;
};

/// A graph read from disk (or stdin) together with its content digest.
struct LoadedGraph {
  std::string path;
  std::string digest;
  PlaneGraph graph;
};

LoadedGraph load_graph(const std::string& path);
std::string crc32_digest(const std::string& bytes);

/// Top-level envelope: {"schema", "command", ...}.
json envelope(const std::string& command);

json graph_summary(const PlaneGraph& g);
/// {"0": 1, "1": 2, ...}
json coloring_json(const Coloring& c);
json charge_json(const Charge& c);
json claim_json(const ClaimResult& c);
json descriptor_json(const GadgetDescriptor& d);
json ledger_json(const ChargeLedger& l);
json audit_json(const AuditReport& r);

/// Milliseconds elapsed since `start`, for --timings output.
double millis_since(std::chrono::steady_clock::time_point start);

/// Writes `text` to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace defcol::cli
