#include "defcol/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <boost/crc.hpp>

#include "defcol/error.hpp"
#include "defcol/graph_io.hpp"

namespace defcol::cli {

namespace {

template <typename T>
std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::istringstream in(raw);
  T value{};
  if (!(in >> value) || !in.eof()) {
    throw Error(ErrorCode::InvalidParam, std::string("cannot parse ") + name + "='" + raw + "'");
  }
  return value;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

SearchBudget BudgetFlags::solver() const {
  const auto n = nodes ? nodes : env_number<std::uint64_t>("DEFCOL_MAX_NODES");
  const auto s = seconds ? seconds : env_number<double>("DEFCOL_MAX_SECONDS");
  SearchBudget b;
  b.max_nodes = n.value_or(kDefaultNodes);
  b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(s.value_or(kDefaultSeconds) * 1000.0));
  return b;
}

CycleBudget BudgetFlags::cycles() const { return CycleBudget{solver().max_nodes}; }

std::string crc32_digest(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  std::ostringstream out;
  out << "crc32:" << std::hex;
  out.width(8);
  out.fill('0');
  out << crc.checksum();
  return out.str();
}

LoadedGraph load_graph(const std::string& path) {
  const std::string text = read_all(path);
  return {path, crc32_digest(text), parse_graph(text)};
}

json envelope(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

json graph_summary(const PlaneGraph& g) {
  json j{{"vertices", g.num_vertices()},
         {"edges", g.num_edges()},
         {"embedded", g.has_embedding()},
         {"connected", g.is_connected()}};
  if (g.has_embedding() && g.is_connected()) j["euler_certified"] = is_euler_certified(g);
  return j;
}

json coloring_json(const Coloring& c) {
  json j = json::object();
  for (Vertex v = 0; v < c.size(); ++v) j[std::to_string(v)] = c[v];
  return j;
}

json charge_json(const Charge& c) { return to_string(c); }

json claim_json(const ClaimResult& c) {
  return json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}};
}

json descriptor_json(const GadgetDescriptor& d) {
  json labels = json::object();
  for (const auto& [name, v] : d.labels) labels[name] = v;
  json j{{"family", std::string(to_string(d.family))},
         {"D", d.D},
         {"labels", labels},
         {"spectrum_claim",
          {{"kind", d.spectrum.kind == SpectrumClaim::Kind::Equal ? "equal" : "subset"},
           {"lengths", d.spectrum.lengths},
           {"expression", d.spectrum.expression}}},
         {"expected_vertices", d.expected_vertices},
         {"expected_edges", d.expected_edges}};
  j["l"] = d.l ? json(*d.l) : json(nullptr);
  j["infeasible_spec"] = d.infeasible_spec ? json(d.infeasible_spec->to_string()) : json(nullptr);
  return j;
}

json ledger_json(const ChargeLedger& l) {
  json transfers = json::array();
  for (const auto& t : l.transfers) {
    transfers.push_back({{"source", t.source.to_string()},
                         {"target", t.target.to_string()},
                         {"amount", charge_json(t.amount)},
                         {"rule", t.rule}});
  }
  json finals = json::object();
  for (std::size_t v = 0; v < l.vertex_final.size(); ++v) {
    finals[Element::vertex(static_cast<int>(v)).to_string()] = charge_json(l.vertex_final[v]);
  }
  for (std::size_t f = 0; f < l.face_final.size(); ++f) {
    finals[Element::face(static_cast<int>(f)).to_string()] = charge_json(l.face_final[f]);
  }
  return json{{"transfers", transfers}, {"final", finals}};
}

json audit_json(const AuditReport& r) {
  json negative = json::array();
  for (const auto& e : r.negative) negative.push_back(e.to_string());
  json configs = json::array();
  for (const auto& c : r.configs) {
    configs.push_back({{"kind", std::string(to_string(c.kind))}, {"vertices", c.vertices}, {"faces", c.faces}});
  }
  json j{{"section", std::string(to_string(r.section))},
         {"initial_total", charge_json(r.initial_total)},
         {"final_total", charge_json(r.ledger.total_final())},
         {"expected_total", charge_json(charge_spec(r.section).expected_total())},
         {"total_matches", r.total_matches},
         {"conserved", r.conserved},
         {"negative", negative},
         {"configs", configs},
         {"meta_claim_holds", r.meta_claim_holds},
         {"status", r.ok() ? "pass" : "fail"},
         {"ledger", ledger_json(r.ledger)}};
  if (r.groups) {
    json groups = json::array();
    for (const auto& g : *r.groups) {
      json members = json::array();
      for (const auto& e : g.members) members.push_back(e.to_string());
      groups.push_back({{"members", members}, {"total", charge_json(g.total)}});
    }
    j["groups"] = groups;
  }
  return j;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParam, "cannot write '" + path + "'");
  out << text;
}

}  // namespace defcol::cli
