#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/error.hpp"
#include "defcol/plane_graph.hpp"

namespace defcol {

enum class ReductionKind { ComponentSplit, DropOneVertex, DropEdgeLowLow, ReplaceThreeVertex, DropTerribleTwoVertex };
std::string_view to_string(ReductionKind k) noexcept;

/// One reduction of the (5,5)-colourer. Vertex ids of the input survive in
/// `reduced`: deleted vertices become isolated, and the auxiliary path
/// vertices of a 3-vertex replacement are appended after the old ids.
struct ReductionStep {
  ReductionKind kind = ReductionKind::DropOneVertex;
  /// drop-1-vertex: {v, u}; drop-edge: {x, y}; replace: {v, v1, v2, v3} with
  /// v1 v2 v3 in rotation order; drop-terrible: {w, v, u}. Empty for splits.
  std::vector<Vertex> witness;
  /// u12, u23, u31 of a replacement (u_i sits between v_i and v_{i+1}).
  std::array<Vertex, 3> auxiliary{-1, -1, -1};
  /// For drop-terrible: (x, y) of every other terrible face xyv at v, with x the 2-vertex.
  std::vector<std::pair<Vertex, Vertex>> terrible_pairs;
  PlaneGraph reduced;
};

/// Thrown when no reduction applies to a graph that still has edges. The
/// offending graph is kept for triage.
class IrreducibleGraphError : public Error {
 public:
  IrreducibleGraphError(PlaneGraph g, const std::string& message)
      : Error(ErrorCode::IrreducibleGraph, message), graph_(std::move(g)) {}
  const PlaneGraph& graph() const noexcept { return graph_; }

 private:
  PlaneGraph graph_;
};

/// (number of 3+ vertices, number of edges); every reduction decreases it
/// lexicographically.
std::pair<int, int> reduction_measure(const PlaneGraph& g);

/// First applicable reduction in the order: component split (two or more
/// components with edges), 1-vertex, edge with both ends of degree <= 6,
/// 3-vertex, 2-vertex on a terrible 3-face at an overloaded 7+ vertex.
/// Isolated vertices are ignored. Returns nullopt for irreducible graphs.
std::optional<ReductionStep> find_reduction(const PlaneGraph& g);

/// Individual reductions, without checking their preconditions beyond the
/// degrees they need (InvalidParam otherwise).
ReductionStep reduce_drop_one_vertex(const PlaneGraph& g, Vertex v);
ReductionStep reduce_drop_edge(const PlaneGraph& g, Vertex x, Vertex y);
/// Deletes the 3-vertex v and joins each pair of rotation-consecutive
/// neighbours by a new path of length 2, spliced into the old slots of v.
ReductionStep reduce_replace_3vertex(const PlaneGraph& g, Vertex v);
/// Deletes the 2-vertex of the first terrible 3-face around v.
ReductionStep reduce_drop_terrible(const PlaneGraph& g, Vertex v);

/// Repairs a colouring of g - xy (indexed by g's vertices) into one of g:
/// when x and y share a class, each endpoint saturated in g - xy moves to
/// the other class.
Coloring extend_after_drop_edge(const PlaneGraph& g, const Coloring& coloring, Vertex x, Vertex y);

/// Class for the removed 3-vertex v given the classes of v1, v2, v3 and of
/// the path vertices u_i between v_i and v_{i+1}.
int choose_class_after_replace(const std::array<int, 3>& v_class, const std::array<int, 3>& u_class);

/// Turns a colouring of the replaced graph H (ids of g followed by u12, u23,
/// u31) into a colouring of g.
Coloring extend_after_replace_3vertex(const PlaneGraph& g, const Coloring& coloring_on_h, Vertex v,
                                      const std::array<Vertex, 3>& vs, const std::array<Vertex, 3>& us);

/// Colours the 2-vertex w of the terrible face wvu back in. `coloring` is
/// valid for g with w's edges removed. Throws ExtensionWitnessMissing when v
/// is saturated and no other terrible face xyv has both x and y in v's class.
Coloring extend_after_drop_terrible(const PlaneGraph& g, const Coloring& coloring, Vertex w, Vertex v, Vertex u);

struct Color55Options {
  /// Colour irreducible remainders with the exact solver instead of throwing.
  bool fallback_solver = false;
};

struct Color55Result {
  Coloring coloring;
  std::map<ReductionKind, int> steps;
  int fallback_uses = 0;
};

/// (5,5)-colouring of a C4-free plane graph. Throws NoEmbedding, NotPlanar,
/// ContainsC4, IrreducibleGraph and InvariantViolated (a failed runtime check
/// on the measure, the embedding or the final colouring).
Color55Result color55(const PlaneGraph& g, const Color55Options& options = {});

}  // namespace defcol
