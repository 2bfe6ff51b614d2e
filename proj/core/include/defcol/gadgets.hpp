#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/cycles.hpp"
#include "defcol/plane_graph.hpp"
#include "defcol/solver.hpp"

namespace defcol {

/// Non-colourable constructions and their building blocks.
///
/// Building blocks:
///   H2(D; x, y)   2D+1 internally disjoint x,y-paths of length 2
///   F1(D; x, y)   2D+1 internally disjoint x,y-paths of length 3
///   H1(D, l; v1)  cycle v1..v_{l+1}, edges v_i v_{i+1} (i <= l) replaced by H2
///   Fo / Fe       cycle v1..v_l (l odd >= 3), edges at odd / even indices
///                 replaced by F1 (v_{l+1} is v1)
///   T0(D; x)      D+1 triangles sharing x
///   X0(D; v)      D+1 copies of K4 sharing v
/// Gadgets:
///   H(D, l)   D+1 copies of H1 glued at v1            not (D, D)-colourable
///   F(D, l)   two Fo copies, bridge between the v1s   not (0, D)-colourable
///   F'(D, l)  star on D+2 vertices, Fe glued at each  not (0, D)-colourable
///   T(D)      two T0 copies, bridge between the xs    not (0, D)-colourable
///   X(D)      three X0 copies, triangle on the vs     not (0, 0, D)-colourable
///
/// Every generator ships a planar rotation: parallel paths form fans, glued
/// copies occupy contiguous blocks of the shared vertex's rotation, and
/// bridges are appended.
enum class GadgetFamily { H2, H1, H, F1, Fo, Fe, F, Fprime, T0, T, X0, X };

std::string_view to_string(GadgetFamily f) noexcept;
/// Accepts the names printed by to_string, plus "F'" for Fprime.
GadgetFamily parse_family(std::string_view name);
/// Families parameterised by l.
bool uses_length(GadgetFamily f) noexcept;

struct SpectrumClaim {
  enum class Kind { Subset, Equal };
  Kind kind = Kind::Subset;
  std::set<int> lengths;
  /// Human-readable form, e.g. "subset of {4, 2l+1}".
  std::string expression;

  bool holds_for(const std::set<int>& spectrum) const;
};

struct GadgetDescriptor {
  GadgetFamily family = GadgetFamily::H2;
  int D = 0;
  std::optional<int> l;
  /// Distinguished vertices, named uniquely: "x", "y", "v1", "cut1", ...
  std::vector<std::pair<std::string, Vertex>> labels;
  SpectrumClaim spectrum;
  std::optional<ColorSpec> infeasible_spec;
  int expected_vertices = 0;
  int expected_edges = 0;
};

struct Gadget {
  PlaneGraph graph;
  GadgetDescriptor descriptor;
};

Gadget gen_H2(int D);
Gadget gen_H1(int D, int l);
Gadget gen_H(int D, int l);
Gadget gen_F1(int D);
Gadget gen_Fo(int D, int l);
Gadget gen_Fe(int D, int l);
Gadget gen_F(int D, int l);
Gadget gen_Fprime(int D, int l);
Gadget gen_T0(int D);
Gadget gen_T(int D);
Gadget gen_X0(int D);
Gadget gen_X(int D);

/// Dispatches on the family; `l` is required exactly when uses_length(f).
/// Throws InvalidParam for negative D, missing l, l < 1 (H family), or l
/// even or below 3 (F family).
Gadget make_gadget(GadgetFamily f, int D, std::optional<int> l = std::nullopt);

/// Closed-form (|V|, |E|) derived from the constructions.
std::pair<int, int> expected_size(GadgetFamily f, int D, std::optional<int> l = std::nullopt);

enum class ClaimStatus { Pass, Fail, Unverified };
std::string_view to_string(ClaimStatus s) noexcept;

struct ClaimResult {
  std::string name;  // "embedding", "size", "spectrum", "infeasible"
  ClaimStatus status = ClaimStatus::Unverified;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  /// Fail if any claim failed, else Unverified if any is unverified, else Pass.
  ClaimStatus overall() const noexcept;
  const ClaimResult* find(std::string_view name) const;
};

struct VerifyOptions {
  SearchBudget solver;
  CycleBudget cycles;
  /// Infeasibility claims with D above this are reported unverified.
  int max_solved_D = 1;
};

/// Checks the embedding (Euler-certified), the closed-form size, the cycle
/// spectrum claim and the infeasibility claim. Budget exhaustion marks a
/// claim unverified, never failed.
VerificationReport verify_descriptor(const PlaneGraph& g, const GadgetDescriptor& desc,
                                     const VerifyOptions& options = {});

}  // namespace defcol
