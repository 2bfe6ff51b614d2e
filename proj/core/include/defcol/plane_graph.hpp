#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace defcol {

using Vertex = int;

/// Simple undirected graph, optionally carrying a rotation system.
///
/// With an embedding, `rotation(v)` is the cyclic order of the neighbours of
/// `v`. Faces are traced with the successor convention: after arriving at `v`
/// along the directed edge (u, v), the walk leaves along (v, w) where `w`
/// follows `u` in the rotation of `v`. Reversing every rotation yields the
/// mirror embedding, which has the same face degrees and incidence counts.
///
/// Graphs built from abstract adjacency (for example graph6 input) keep their
/// neighbours sorted and report `has_embedding() == false`; face-dependent
/// operations reject them with `ErrorCode::NoEmbedding`.
///
/// Instances are immutable after construction and safe to share.
class PlaneGraph {
 public:
  using Rotation = std::vector<Vertex>;

  PlaneGraph() = default;

  /// Validates a rotation system. Throws SelfLoop, DuplicateNeighbor,
  /// UnknownVertex or AsymmetricAdjacency.
  static PlaneGraph from_rotations(std::vector<Rotation> rotations);

  /// Abstract graph without embedding. Neighbour lists need not be sorted.
  static PlaneGraph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  /// Abstract graph from an edge list on vertices 0..n-1.
  static PlaneGraph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const noexcept { return static_cast<int>(rotation_.size()); }
  int num_edges() const noexcept { return num_edges_; }
  bool has_embedding() const noexcept { return embedded_; }
  bool is_connected() const noexcept { return connected_; }

  int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
  int max_degree() const noexcept;
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return rotation_[v]; }
  const std::vector<Rotation>& rotations() const noexcept { return rotation_; }

  bool has_edge(Vertex u, Vertex v) const;

  /// Position of `u` inside rotation(v), or -1.
  int slot_of(Vertex v, Vertex u) const;

  /// Position of `v` in the rotation of its `slot`-th neighbour `rotation(v)[slot]`.
  int twin_slot(Vertex v, int slot) const { return twin_[v][slot]; }

  /// The neighbour following `u` in the rotation of `v`.
  Vertex successor(Vertex v, Vertex u) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Component index per vertex, numbered in order of smallest vertex.
  std::vector<int> component_labels() const;
  int num_components() const;

  /// Vertex sets of the connected components, each sorted.
  std::vector<std::vector<Vertex>> components() const;

  /// Copy with the edge uv removed; the embedding is inherited.
  PlaneGraph without_edge(Vertex u, Vertex v) const;

  /// Copy with `removed` deleted and the rest renumbered densely in order.
  /// `new_to_old`, when given, receives the original id of each new vertex.
  PlaneGraph without_vertices(std::span<const Vertex> removed,
                              std::vector<Vertex>* new_to_old = nullptr) const;

  /// Induced subgraph on `kept` (renumbered in the given order).
  PlaneGraph induced(std::span<const Vertex> kept) const;

  /// Same graph with the embedding dropped.
  PlaneGraph forget_embedding() const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.embedded_ == b.embedded_ && a.rotation_ == b.rotation_;
  }

 private:
  void finalize();

  std::vector<Rotation> rotation_;
  std::vector<std::vector<int>> twin_;
  std::vector<std::vector<Vertex>> sorted_;
  int num_edges_ = 0;
  bool embedded_ = false;
  bool connected_ = false;
};

/// A face given by its canonical boundary walk: the directed edges
/// (walk[i], walk[i+1 mod n]). Cut edges appear once in each direction.
struct FaceWalk {
  int id = 0;
  std::vector<Vertex> walk;

  int degree() const noexcept { return static_cast<int>(walk.size()); }
};

/// Number of times the walk of `f` passes through `v` (the triples e v e').
int k_incidence(const FaceWalk& f, Vertex v);

/// Faces of an embedded graph together with a dart-to-face index.
///
/// Tracing works per component; `FaceSet::trace` requires a connected graph,
/// while `FaceSet::trace_all` accepts any embedded graph and yields the faces
/// of each component separately (components do not share an outer face).
/// A lone vertex contributes one face of degree 0.
class FaceSet {
 public:
  /// Throws NoEmbedding or Disconnected.
  static FaceSet trace(const PlaneGraph& g);
  /// Throws NoEmbedding.
  static FaceSet trace_all(const PlaneGraph& g);

  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }
  int size() const noexcept { return static_cast<int>(faces_.size()); }
  const FaceWalk& operator[](int f) const { return faces_[f]; }

  /// Face containing the directed edge u -> v.
  int face_of(Vertex u, Vertex v) const;

  /// Faces incident with v, with repetition k_{f,v}, in rotation order:
  /// entry i is the face that leaves v along its i-th rotation slot.
  const std::vector<int>& faces_around(Vertex v) const { return dart_face_[v]; }

 private:
  std::vector<FaceWalk> faces_;
  std::vector<PlaneGraph::Rotation> rotation_;
  std::vector<std::vector<int>> dart_face_;
};

/// Equivalent to FaceSet::trace(g).faces().
std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

/// Connected, embedded and V - E + F = 2.
bool is_euler_certified(const PlaneGraph& g);

/// Every component satisfies V - E + F = 2 under its inherited rotation.
bool is_planar_embedding(const PlaneGraph& g);

/// Counting identities of an embedded graph, each checked separately.
struct StructureCheck {
  bool handshake = false;         // sum of vertex degrees = 2|E|
  bool face_handshake = false;    // sum of face degrees = 2|E|
  bool face_incidence = false;    // d(f) = sum over v of k_{f,v}, every face
  bool euler = false;             // V - E + F = 2 per component
  bool ok() const noexcept { return handshake && face_handshake && face_incidence && euler; }
};

/// Throws NoEmbedding.
StructureCheck check_structure(const PlaneGraph& g);

/// Rotation system of a straight-line drawing: neighbours sorted by angle.
/// The result is a planar embedding whenever the drawing has no crossings.
PlaneGraph from_straight_line(std::span<const std::pair<double, double>> coords,
                              std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace defcol
