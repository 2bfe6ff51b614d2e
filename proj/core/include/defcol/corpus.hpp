#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "defcol/plane_graph.hpp"

namespace defcol::corpus {

using Rng = std::mt19937_64;

PlaneGraph path_graph(int n);
PlaneGraph cycle_graph(int n);
PlaneGraph star_graph(int leaves);
/// k triangles sharing one vertex.
PlaneGraph windmill(int k);

PlaneGraph tetrahedron();
PlaneGraph cube();
PlaneGraph octahedron();
PlaneGraph dodecahedron();

/// Uniform random recursive tree; any rotation of a tree is planar.
PlaneGraph random_tree(int n, Rng& rng);

/// Vertices on a circle with the Hamiltonian cycle, plus random non-crossing
/// chords that keep the graph free of 4-cycles. `attempts` chords are tried.
PlaneGraph random_outerplanar_c4_free(int n, int attempts, Rng& rng);

/// Straight-line drawing of random points: candidate segments are added
/// shortest first (segments at the `hubs` first points get priority) as
/// long as they cross nothing and close no 4-cycle. The result is connected:
/// a segment between two components never closes a cycle.
PlaneGraph random_plane_c4_free(int n, int hubs, Rng& rng);

/// Two concentric cycles of n hubs. Each cycle edge lies on a triangle
/// with a 2-vertex; 2-paths join every hub to two hubs of the other cycle
/// and to one of two centres on its side, and a 3-vertex joins both centres
/// to one hub. Every hub has degree 7 and two terrible triangles, and no
/// edge joins two vertices of degree <= 6. C4-free; needs n >= 14.
PlaneGraph hub_annulus(int n, Rng& rng);

/// Replaces every edge by a path with `times` inner vertices. With
/// times >= 1 the girth at least doubles.
PlaneGraph subdivide(const PlaneGraph& g, int times = 1);

/// Identifies vertex vb of b with vertex va of a (rotations concatenated).
PlaneGraph glue_at_vertex(const PlaneGraph& a, Vertex va, const PlaneGraph& b, Vertex vb);

/// Disjoint union plus the bridge va - vb (vb renumbered after a).
PlaneGraph join_by_edge(const PlaneGraph& a, Vertex va, const PlaneGraph& b, Vertex vb);

struct Entry {
  std::string name;
  PlaneGraph graph;
};

/// Connected Euler-certified plane graphs of every kind above plus all
/// gadget families at D <= 1, deterministic in `seed`.
std::vector<Entry> standard_corpus(std::uint64_t seed);

/// C4-free plane graphs with up to `max_vertices` vertices: F, F' and T
/// gadgets, subdivisions, outerplanar samples, greedy plane samples, trees,
/// windmills, hub annuli, the dodecahedron and glued compositions.
std::vector<Entry> c4_free_corpus(std::uint64_t seed, int count, int max_vertices = 200);

/// Small abstract graphs (no embedding needed) for solver cross-checks:
/// random G(n, p) with n <= max_vertices, deterministic in `seed`.
std::vector<Entry> small_random_graphs(std::uint64_t seed, int count, int max_vertices = 12);

}  // namespace defcol::corpus
