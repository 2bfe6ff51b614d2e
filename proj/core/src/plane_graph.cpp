#include "defcol/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "defcol/error.hpp"

namespace defcol {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

PlaneGraph PlaneGraph::from_rotations(std::vector<Rotation> rotations) {
  const int n = static_cast<int>(rotations.size());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rotations[v]) {
      if (u < 0 || u >= n) {
        throw Error(ErrorCode::UnknownVertex,
                    "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(u));
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(v));
    }
    Rotation sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorCode::DuplicateNeighbor,
                  "vertex " + std::to_string(v) + " lists " + std::to_string(*dup) + " twice");
    }
  }
  PlaneGraph g;
  g.rotation_ = std::move(rotations);
  g.embedded_ = true;
  g.finalize();
  return g;
}

PlaneGraph PlaneGraph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  PlaneGraph g = from_rotations(std::move(adjacency));
  g.embedded_ = false;
  return g;
}

PlaneGraph PlaneGraph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge " + edge_text(u, v) + " out of range");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

void PlaneGraph::finalize() {
  const int n = num_vertices();
  sorted_.assign(n, {});
  twin_.assign(n, {});
  std::size_t darts = 0;
  for (Vertex v = 0; v < n; ++v) {
    sorted_[v] = rotation_[v];
    std::sort(sorted_[v].begin(), sorted_[v].end());
    darts += rotation_[v].size();
  }
  for (Vertex v = 0; v < n; ++v) {
    twin_[v].resize(rotation_[v].size());
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const Vertex u = rotation_[v][i];
      const int back = slot_of(u, v);
      if (back < 0) {
        throw Error(ErrorCode::AsymmetricAdjacency,
                    std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");
      }
      twin_[v][i] = back;
    }
  }
  num_edges_ = static_cast<int>(darts / 2);
  connected_ = n > 0 && num_components() == 1;
}

int PlaneGraph::max_degree() const noexcept {
  int best = 0;
  for (const auto& r : rotation_) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= num_vertices()) return false;
  return std::binary_search(sorted_[u].begin(), sorted_[u].end(), v);
}

int PlaneGraph::slot_of(Vertex v, Vertex u) const {
  const auto& r = rotation_[v];
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == u) return static_cast<int>(i);
  }
  return -1;
}

Vertex PlaneGraph::successor(Vertex v, Vertex u) const {
  const int i = slot_of(v, u);
  if (i < 0) throw Error(ErrorCode::UnknownVertex, edge_text(v, u) + " is not an edge");
  const auto& r = rotation_[v];
  return r[(static_cast<std::size_t>(i) + 1) % r.size()];
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : sorted_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> PlaneGraph::component_labels() const {
  const int n = num_vertices();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : rotation_[v]) {
        if (label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

int PlaneGraph::num_components() const {
  const auto label = component_labels();
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

std::vector<std::vector<Vertex>> PlaneGraph::components() const {
  const auto label = component_labels();
  std::vector<std::vector<Vertex>> out(label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1);
  for (Vertex v = 0; v < num_vertices(); ++v) out[label[v]].push_back(v);
  return out;
}

PlaneGraph PlaneGraph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw Error(ErrorCode::UnknownVertex, edge_text(u, v) + " is not an edge");
  auto rot = rotation_;
  std::erase(rot[u], v);
  std::erase(rot[v], u);
  PlaneGraph g;
  g.rotation_ = std::move(rot);
  g.embedded_ = embedded_;
  g.finalize();
  return g;
}

PlaneGraph PlaneGraph::without_vertices(std::span<const Vertex> removed,
                                        std::vector<Vertex>* new_to_old) const {
  std::vector<bool> gone(num_vertices(), false);
  for (Vertex v : removed) gone.at(v) = true;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  if (new_to_old) *new_to_old = kept;
  return induced(kept);
}

PlaneGraph PlaneGraph::induced(std::span<const Vertex> kept) const {
  std::vector<Vertex> old_to_new(num_vertices(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) old_to_new[kept[i]] = static_cast<Vertex>(i);
  std::vector<Rotation> rot(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (Vertex u : rotation_[kept[i]]) {
      if (old_to_new[u] >= 0) rot[i].push_back(old_to_new[u]);
    }
  }
  PlaneGraph g;
  g.rotation_ = std::move(rot);
  g.embedded_ = embedded_;
  g.finalize();
  return g;
}

PlaneGraph PlaneGraph::forget_embedding() const {
  return from_adjacency(rotation_);
}

int k_incidence(const FaceWalk& f, Vertex v) {
  return static_cast<int>(std::count(f.walk.begin(), f.walk.end(), v));
}

FaceSet FaceSet::trace_all(const PlaneGraph& g) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "graph carries no rotation system");
  FaceSet fs;
  fs.rotation_ = g.rotations();
  const int n = g.num_vertices();
  fs.dart_face_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) fs.dart_face_[v].assign(g.degree(v), -1);

  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) == 0) {
      fs.faces_.push_back(FaceWalk{static_cast<int>(fs.faces_.size()), {}});
      continue;
    }
    for (int slot = 0; slot < g.degree(s); ++slot) {
      if (fs.dart_face_[s][slot] >= 0) continue;
      FaceWalk face{static_cast<int>(fs.faces_.size()), {}};
      Vertex v = s;
      int i = slot;
      while (fs.dart_face_[v][i] < 0) {
        fs.dart_face_[v][i] = face.id;
        face.walk.push_back(v);
        const Vertex w = g.rotation(v)[i];
        // Leave w along the slot after the one pointing back to v.
        const int back = g.twin_slot(v, i);
        i = (back + 1) % g.degree(w);
        v = w;
      }
      fs.faces_.push_back(std::move(face));
    }
  }
  return fs;
}

FaceSet FaceSet::trace(const PlaneGraph& g) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "graph carries no rotation system");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "face tracing needs a connected graph");
  return trace_all(g);
}

int FaceSet::face_of(Vertex u, Vertex v) const {
  const auto& r = rotation_.at(u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == v) return dart_face_[u][i];
  }
  throw Error(ErrorCode::UnknownVertex, edge_text(u, v) + " is not an edge");
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& g) { return FaceSet::trace(g).faces(); }

bool is_euler_certified(const PlaneGraph& g) {
  if (!g.has_embedding() || !g.is_connected()) return false;
  const int faces = FaceSet::trace(g).size();
  return g.num_vertices() - g.num_edges() + faces == 2;
}

bool is_planar_embedding(const PlaneGraph& g) {
  if (!g.has_embedding()) return false;
  // V - E + F = 2C when every component is a sphere embedding; the
  // per-component genus is nonnegative, so equality forces all to be zero.
  const int faces = FaceSet::trace_all(g).size();
  return g.num_vertices() - g.num_edges() + faces == 2 * g.num_components();
}

StructureCheck check_structure(const PlaneGraph& g) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "graph has no rotation system");
  StructureCheck c;
  long degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
  c.handshake = degree_sum == 2L * g.num_edges();

  const FaceSet fs = FaceSet::trace_all(g);
  long face_sum = 0;
  c.face_incidence = true;
  for (const FaceWalk& f : fs.faces()) {
    face_sum += f.degree();
    int k_sum = 0;
    for (Vertex v : std::set<Vertex>(f.walk.begin(), f.walk.end())) k_sum += k_incidence(f, v);
    // A lone vertex has an empty walk and passes trivially.
    if (k_sum != f.degree()) c.face_incidence = false;
  }
  c.face_handshake = face_sum == 2L * g.num_edges();
  c.euler = is_planar_embedding(g);
  return c;
}

PlaneGraph from_straight_line(std::span<const std::pair<double, double>> coords,
                              std::span<const std::pair<Vertex, Vertex>> edges) {
  const int n = static_cast<int>(coords.size());
  std::vector<PlaneGraph::Rotation> rot(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge " + edge_text(u, v) + " out of range");
    }
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto angle = [&](Vertex u) {
      return std::atan2(coords[u].second - coords[v].second, coords[u].first - coords[v].first);
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

}  // namespace defcol
