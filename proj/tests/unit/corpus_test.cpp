#include <gtest/gtest.h>

#include <set>

#include "defcol/corpus.hpp"
#include "defcol/cycles.hpp"
#include "defcol/error.hpp"

namespace defcol {
namespace {

TEST(Corpus, StandardCorpusIsCertifiedAndIncludesGadgets) {
  const auto entries = corpus::standard_corpus(1);
  EXPECT_GE(entries.size(), 20u);
  std::set<std::string> names;
  int gadgets = 0;
  for (const auto& e : entries) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_TRUE(is_euler_certified(e.graph)) << e.name;
    gadgets += e.name.rfind("gadget-", 0) == 0;
  }
  EXPECT_GT(gadgets, 10);
}

TEST(Corpus, C4FreeCorpusRespectsItsContract) {
  const auto entries = corpus::c4_free_corpus(7, 100);
  ASSERT_EQ(entries.size(), 100u);
  for (const auto& e : entries) {
    EXPECT_LE(e.graph.num_vertices(), 200) << e.name;
    EXPECT_TRUE(is_planar_embedding(e.graph)) << e.name;
    EXPECT_TRUE(e.graph.is_connected()) << e.name;
    EXPECT_FALSE(has_cycle_of_length(e.graph, 4)) << e.name;
  }
}

TEST(Corpus, DeterministicInSeed) {
  const auto a = corpus::c4_free_corpus(9, 60);
  const auto b = corpus::c4_free_corpus(9, 60);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].graph, b[i].graph);
  const auto c = corpus::c4_free_corpus(10, 60);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].graph == c[i].graph);
  EXPECT_TRUE(differs);
}

TEST(Corpus, Builders) {
  corpus::Rng rng(3);
  const PlaneGraph t = corpus::random_tree(30, rng);
  EXPECT_EQ(t.num_edges(), 29);
  EXPECT_TRUE(is_euler_certified(t));
  const PlaneGraph s = corpus::subdivide(corpus::tetrahedron());
  EXPECT_EQ(s.num_vertices(), 10);
  EXPECT_EQ(cycle_spectrum(s), (std::set<int>{6, 8}));
  const PlaneGraph glued = corpus::glue_at_vertex(corpus::cycle_graph(5), 0, corpus::cycle_graph(3), 0);
  EXPECT_EQ(glued.num_vertices(), 7);
  EXPECT_TRUE(is_euler_certified(glued));
  const PlaneGraph joined = corpus::join_by_edge(corpus::cube(), 0, corpus::dodecahedron(), 0);
  EXPECT_EQ(joined.num_edges(), 12 + 30 + 1);
  EXPECT_TRUE(is_euler_certified(joined));
  const PlaneGraph annulus = corpus::hub_annulus(15, rng);
  EXPECT_EQ(annulus.num_vertices(), 8 * 15 + 4);
  EXPECT_TRUE(is_euler_certified(annulus));
  EXPECT_FALSE(has_cycle_of_length(annulus, 4));
  for (Vertex v = 0; v < 30; ++v) EXPECT_EQ(annulus.degree(v), 7);
  EXPECT_THROW(corpus::hub_annulus(13, rng), Error);
  for (const auto& e : corpus::small_random_graphs(1, 30, 9)) EXPECT_LE(e.graph.num_vertices(), 9);
}

}  // namespace
}  // namespace defcol
