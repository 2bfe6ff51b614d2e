#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "defcol/plane_graph.hpp"

namespace defcol {

/// The three charge systems: balanced 2-partition for C4-free graphs, the
/// unbalanced 2-partition for {C3, C4, C6}-free graphs, and the unbalanced
/// 3-partition for C4-free graphs.
enum class Section { Bal2, Unbal2, Unbal3 };

std::string_view to_string(Section s) noexcept;
/// Accepts "bal2", "unbal2", "unbal3".
Section parse_section(std::string_view name);

using Charge = boost::rational<std::int64_t>;
std::string to_string(const Charge& c);

/// Initial charge mu = a * degree + b, separately for vertices and faces.
struct ChargeSpec {
  Section section;
  int vertex_slope, vertex_offset;
  int face_slope, face_offset;

  Charge vertex_charge(int degree) const { return Charge(vertex_slope * degree + vertex_offset); }
  Charge face_charge(int degree) const { return Charge(face_slope * degree + face_offset); }
  /// -12 for the 2-partition systems, -8 for the 3-partition one.
  Charge expected_total() const;
};

ChargeSpec charge_spec(Section s) noexcept;

/// Cycle lengths a graph must avoid before the rules of `s` apply.
std::vector<int> forbidden_cycles(Section s);

struct Element {
  enum class Kind { Vertex, Face };
  Kind kind = Kind::Vertex;
  int id = 0;

  static Element vertex(Vertex v) { return {Kind::Vertex, v}; }
  static Element face(int f) { return {Kind::Face, f}; }
  std::string to_string() const;  // "v3", "f0"

  friend auto operator<=>(const Element&, const Element&) = default;
};

struct Transfer {
  Element source;
  Element target;
  Charge amount;
  std::string rule;  // "R1", "R3A", ...
};

struct ChargeLedger {
  Section section = Section::Bal2;
  std::vector<FaceWalk> faces;
  std::vector<Charge> vertex_initial;
  std::vector<Charge> face_initial;
  std::vector<Transfer> transfers;
  std::vector<Charge> vertex_final;
  std::vector<Charge> face_final;

  Charge initial(Element e) const;
  Charge final_charge(Element e) const;
  Charge total_initial() const;
  Charge total_final() const;
  /// Sum of transfers into `e` minus transfers out of it.
  Charge net(Element e) const;
};

/// Initial charges only (no transfers; final equals initial).
/// Throws NoEmbedding, Disconnected or NotPlanar.
ChargeLedger initial_charges(const PlaneGraph& g, Section s);

enum class FaceTag { Plain, Terrible3, Bad5PatternA, Bad5PatternB, Annoying };
std::string_view to_string(FaceTag t) noexcept;

struct FaceClass {
  int face = 0;
  FaceTag tag = FaceTag::Plain;
};

/// Tags relevant to the section: terrible 3-faces (bal2), bad 5-faces
/// (unbal2), annoying faces (unbal3); everything else is Plain.
///
/// Bad faces are 5-faces on five distinct vertices whose cyclic degree
/// pattern, read in either direction, is (47+, 2, 2, 47+, 2) or
/// (2, 47+, 2, m, m) with 3 <= m <= 46.
std::vector<FaceClass> classify_faces(const PlaneGraph& g, Section s);

/// Runs every rule of the section and returns the full ledger. Throws
/// CycleRestrictionViolated when g contains a forbidden cycle, plus the
/// errors of initial_charges.
ChargeLedger apply_rules(const PlaneGraph& g, Section s);

struct ChargeGroup {
  std::vector<Element> members;
  Charge total;
};

/// Each 3-face together with its incident 3-vertices forms a group; every
/// other element is a singleton. Throws GroupingConflict when a 3-vertex lies
/// on two 3-faces.
std::vector<ChargeGroup> grouped_final_charges_unbal3(const ChargeLedger& ledger, const PlaneGraph& g);

enum class ConfigKind {
  Bal2LowVertex,           // vertex of degree <= 1
  Bal2LowLowEdge,          // edge with both ends of degree <= 6
  Bal2ThreeVertex,         // 3-vertex
  Bal2TerribleOverload,    // 7+ vertex on > min(floor(d/2), d-6) terrible 3-faces
  Unbal2LowVertex,         // vertex of degree <= 1
  Unbal2NoHighNeighbor,    // 46- vertex without a 47+ neighbour
  Unbal2TwoBadFaces,       // 2-vertex on two bad faces
  Unbal2BadOverload,       // 47+ vertex on > floor(d/2) bad faces
  Unbal3LowVertex,         // vertex of degree <= 2
  Unbal3NoHighNeighbor,    // 119- vertex without a 120+ neighbour
  Unbal3AnnoyingCluster,   // annoying 5-face, only annoying 3-/5-faces around, >= 3 of them 3-faces
};
std::string_view to_string(ConfigKind k) noexcept;

struct ReducibleConfig {
  Section section = Section::Bal2;
  ConfigKind kind = ConfigKind::Bal2LowVertex;
  std::vector<Vertex> vertices;
  std::vector<int> faces;
};

/// All configurations of the section present in g. Face-based kinds are
/// skipped for graphs without an embedding.
std::vector<ReducibleConfig> find_reducible(const PlaneGraph& g, Section s);

struct AuditReport {
  Section section = Section::Bal2;
  ChargeLedger ledger;
  Charge initial_total;
  bool total_matches = false;
  bool conserved = false;
  std::vector<Element> negative;
  std::optional<std::vector<ChargeGroup>> groups;
  std::vector<ReducibleConfig> configs;
  /// Negative total charge forces some configuration, so an empty list on a
  /// graph meeting the hypotheses would contradict the rules.
  bool meta_claim_holds = false;

  bool ok() const noexcept { return total_matches && conserved && meta_claim_holds; }
};

/// Full pipeline. Requires a connected, Euler-certified graph with at least
/// two vertices that avoids the section's forbidden cycles.
AuditReport audit(const PlaneGraph& g, Section s);

}  // namespace defcol
