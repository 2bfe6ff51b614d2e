#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "defcol/corpus.hpp"
#include "defcol/cycles.hpp"
#include "defcol/error.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/graph_io.hpp"
#include "defcol/plane_graph.hpp"
#include "oracles.hpp"

namespace defcol {
namespace {

using corpus::cycle_graph;

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InvariantViolated;
}

PlaneGraph triangle() { return PlaneGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}}); }

TEST(BuildPlaneGraph, Triangle) {
  const PlaneGraph g = triangle();
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_TRUE(g.has_embedding());
  EXPECT_TRUE(g.is_connected());
}

TEST(BuildPlaneGraph, PlanarK4) {
  const PlaneGraph g = corpus::tetrahedron();
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_TRUE(is_euler_certified(g));
}

TEST(BuildPlaneGraph, RejectsBadRotations) {
  EXPECT_EQ(error_of([] { PlaneGraph::from_rotations({{1}, {}}); }), ErrorCode::AsymmetricAdjacency);
  EXPECT_EQ(error_of([] { PlaneGraph::from_rotations({{1, 1}, {0, 0}}); }), ErrorCode::DuplicateNeighbor);
  EXPECT_EQ(error_of([] { PlaneGraph::from_rotations({{0}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of([] { PlaneGraph::from_rotations({{5}, {0}}); }), ErrorCode::UnknownVertex);
}

TEST(BuildPlaneGraph, ConnectedFlagMatchesReachability) {
  const PlaneGraph two = PlaneGraph::from_rotations({{1}, {0}, {3}, {2}});
  EXPECT_FALSE(two.is_connected());
  EXPECT_EQ(two.num_components(), 2);
  EXPECT_TRUE(PlaneGraph::from_rotations({{}}).is_connected());
}

TEST(TraceFaces, SingleEdgeIsOneFaceOfDegreeTwo) {
  const auto faces = trace_faces(corpus::path_graph(2));
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].degree(), 2);
}

TEST(TraceFaces, TetrahedronHasFourTriangles) {
  const auto faces = trace_faces(corpus::tetrahedron());
  ASSERT_EQ(faces.size(), 4u);
  for (const auto& f : faces) EXPECT_EQ(f.degree(), 3);
}

TEST(TraceFaces, StarHasOneFaceOfDegreeSix) {
  const auto faces = trace_faces(corpus::star_graph(3));
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].degree(), 6);
}

TEST(TraceFaces, SuccessorConvention) {
  // Arriving at 0 from 1, the walk continues to the successor of 1 at 0.
  const PlaneGraph g = corpus::tetrahedron();
  const FaceSet fs = FaceSet::trace(g);
  for (const auto& f : fs.faces()) {
    const int n = f.degree();
    for (int i = 0; i < n; ++i) {
      const Vertex u = f.walk[i], v = f.walk[(i + 1) % n], w = f.walk[(i + 2) % n];
      EXPECT_EQ(g.successor(v, u), w);
    }
  }
}

TEST(TraceFaces, EveryDartOnceAndMirrorAgrees) {
  const PlaneGraph g = corpus::subdivide(corpus::cube());
  const auto faces = trace_faces(g);
  std::set<std::pair<Vertex, Vertex>> darts;
  for (const auto& f : faces) {
    for (int i = 0; i < f.degree(); ++i) {
      EXPECT_TRUE(darts.insert({f.walk[i], f.walk[(i + 1) % f.degree()]}).second);
    }
  }
  EXPECT_EQ(static_cast<int>(darts.size()), 2 * g.num_edges());

  auto rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  std::multiset<int> a, b;
  for (const auto& f : faces) a.insert(f.degree());
  for (const auto& f : trace_faces(PlaneGraph::from_rotations(rot))) b.insert(f.degree());
  EXPECT_EQ(a, b);
}

TEST(TraceFaces, Errors) {
  EXPECT_EQ(error_of([] { trace_faces(PlaneGraph::from_rotations({{1}, {0}, {3}, {2}})); }),
            ErrorCode::Disconnected);
  EXPECT_EQ(error_of([] { trace_faces(corpus::tetrahedron().forget_embedding()); }), ErrorCode::NoEmbedding);
}

TEST(KIncidence, Examples) {
  const auto tri = trace_faces(triangle());
  EXPECT_EQ(k_incidence(tri[0], 0), 1);
  const auto star = trace_faces(corpus::star_graph(3));
  EXPECT_EQ(k_incidence(star[0], 0), 3);
  EXPECT_EQ(k_incidence(star[0], 1), 1);
  const auto path = trace_faces(corpus::path_graph(3));
  EXPECT_EQ(k_incidence(path[0], 1), 2);
  EXPECT_EQ(k_incidence(tri[0], 7), 0);
}

TEST(Structure, HoldsAcrossStandardCorpus) {
  for (const auto& e : corpus::standard_corpus(3)) {
    const StructureCheck c = check_structure(e.graph);
    EXPECT_TRUE(c.ok()) << e.name;
    EXPECT_TRUE(is_euler_certified(e.graph)) << e.name;
  }
}

TEST(Structure, DetectsNonPlanarRotation) {
  // K4 with one rotation reversed lives on the torus.
  auto rot = corpus::tetrahedron().rotations();
  std::reverse(rot[0].begin(), rot[0].end());
  const PlaneGraph g = PlaneGraph::from_rotations(rot);
  EXPECT_FALSE(is_euler_certified(g));
  EXPECT_FALSE(check_structure(g).euler);
  EXPECT_TRUE(check_structure(g).handshake);
}

TEST(Cycles, HasCycleOfLength) {
  const PlaneGraph k4 = corpus::tetrahedron();
  EXPECT_TRUE(has_cycle_of_length(k4, 3));
  EXPECT_TRUE(has_cycle_of_length(k4, 4));
  EXPECT_FALSE(has_cycle_of_length(k4, 5));
  const PlaneGraph c6 = cycle_graph(6);
  for (int k : {3, 4, 5}) EXPECT_FALSE(has_cycle_of_length(c6, k));
  EXPECT_TRUE(has_cycle_of_length(c6, 6));
  EXPECT_TRUE(has_cycle_of_length(corpus::cube(), 4));
  EXPECT_FALSE(has_cycle_of_length(corpus::dodecahedron(), 4));
  EXPECT_TRUE(has_cycle_of_length(corpus::dodecahedron(), 20));
}

TEST(Cycles, Spectrum) {
  EXPECT_EQ(cycle_spectrum(cycle_graph(7)), (std::set<int>{7}));
  EXPECT_EQ(cycle_spectrum(corpus::tetrahedron()), (std::set<int>{3, 4}));
  EXPECT_EQ(cycle_spectrum(gen_T(1).graph), (std::set<int>{3}));
  corpus::Rng rng(5);
  EXPECT_TRUE(cycle_spectrum(corpus::random_tree(30, rng)).empty());
}

TEST(Cycles, BudgetIsReported) {
  EXPECT_EQ(error_of([] { cycle_spectrum(corpus::dodecahedron(), CycleBudget{10}); }), ErrorCode::BudgetExceeded);
}

TEST(Cycles, RespectsObstructionSet) {
  EXPECT_FALSE(respects_obstruction_set(cycle_graph(5), ObstructionSet::all_odd()));
  EXPECT_TRUE(respects_obstruction_set(cycle_graph(6), ObstructionSet::all_odd()));
  EXPECT_FALSE(respects_obstruction_set(cycle_graph(6), ObstructionSet::of({3, 4, 6})));
  EXPECT_TRUE(respects_obstruction_set(cycle_graph(8), ObstructionSet::of({3, 4, 6})));
  EXPECT_TRUE(respects_obstruction_set(corpus::dodecahedron(), ObstructionSet::of({4})));
}

TEST(Cycles, ObstructionSetParsing) {
  EXPECT_TRUE(ObstructionSet::parse("odd").is_all_odd());
  EXPECT_EQ(ObstructionSet::parse("6,3,4").lengths(), (std::set<int>{3, 4, 6}));
  EXPECT_EQ(error_of([] { ObstructionSet::of({2}); }), ErrorCode::InvalidParam);
  EXPECT_EQ(error_of([] { ObstructionSet::parse("3,x"); }), ErrorCode::InvalidParam);
}

// Exhaustive agreement with the subset oracle on small graphs.
TEST(Cycles, SpectrumMatchesSubsetOracle) {
  int checked = 0;
  for (const auto& e : corpus::small_random_graphs(11, 300, 10)) {
    const auto expected = testing::subset_cycle_spectrum(e.graph);
    EXPECT_EQ(cycle_spectrum(e.graph), expected) << e.name;
    for (int k = 3; k <= e.graph.num_vertices(); ++k) {
      EXPECT_EQ(has_cycle_of_length(e.graph, k), expected.contains(k)) << e.name << " k=" << k;
    }
    bool odd = false;
    for (int k : expected) odd = odd || (k % 2 == 1);
    EXPECT_EQ(is_bipartite(e.graph), !odd) << e.name;
    ++checked;
  }
  for (const auto& e : corpus::standard_corpus(2)) {
    if (e.graph.num_vertices() > 10) continue;
    EXPECT_EQ(cycle_spectrum(e.graph), testing::subset_cycle_spectrum(e.graph)) << e.name;
    ++checked;
  }
  EXPECT_GE(checked, 300);
}

TEST(GraphIo, RotationRoundTrip) {
  const std::string text = "planar-rot 1\n0: 1 2\n1: 2 0\n2: 0 1\n";
  const PlaneGraph g = parse_rotation(text);
  EXPECT_EQ(g, triangle());
  EXPECT_EQ(write_rotation(g), text);
  for (const auto& e : corpus::standard_corpus(4)) {
    EXPECT_EQ(parse_rotation(write_rotation(e.graph)), e.graph) << e.name;
  }
}

TEST(GraphIo, RotationIsWhitespaceAndCommentInsensitive) {
  const PlaneGraph g = parse_rotation("# triangle\n  planar-rot   1 \n\n0 :1   2 # first\n1: 2 0\n2:0 1\n");
  EXPECT_EQ(g, triangle());
}

TEST(GraphIo, RotationErrorsCarryPositions) {
  try {
    parse_rotation("planar-rot 1\n0: 1\n1: 0 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedInput);
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_EQ(error_of([] { parse_rotation("0: 1\n1: 0\n"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(error_of([] { parse_rotation("planar-rot 1\n0: 1\n"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(error_of([] { parse_rotation("planar-rot 1\n0: x\n"); }), ErrorCode::MalformedInput);
}

TEST(GraphIo, Graph6) {
  const PlaneGraph g = parse_graph6("D?{");
  EXPECT_FALSE(g.has_embedding());
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(write_graph6(g), "D?{");
  EXPECT_EQ(parse_graph(">>graph6<<D?{\n"), g);
  EXPECT_EQ(error_of([] { write_rotation(parse_graph6("D?{")); }), ErrorCode::NoEmbedding);
  EXPECT_EQ(error_of([] { parse_graph6("D?"); }), ErrorCode::MalformedInput);
  for (const auto& e : corpus::small_random_graphs(8, 50, 12)) {
    EXPECT_EQ(parse_graph6(write_graph6(e.graph)), e.graph) << e.name;
  }
}

TEST(GraphIo, FormatDetection) {
  EXPECT_TRUE(parse_graph("planar-rot 1\n0:\n").has_embedding());
  EXPECT_FALSE(parse_graph("A_\n").has_embedding());
  EXPECT_EQ(error_of([] { parse_graph("   \n"); }), ErrorCode::MalformedInput);
}

}  // namespace
}  // namespace defcol
