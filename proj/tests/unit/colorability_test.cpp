#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "defcol/cnf.hpp"
#include "defcol/coloring.hpp"
#include "defcol/corpus.hpp"
#include "defcol/error.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/solver.hpp"
#include "oracles.hpp"

namespace defcol {
namespace {

using corpus::cycle_graph;

const std::vector<ColorSpec>& oracle_specs() {
  static const std::vector<ColorSpec> specs{ColorSpec({0, 0}), ColorSpec({0, 1}), ColorSpec({1, 1}),
                                            ColorSpec({0, 0, 0}), ColorSpec({0, 0, 1})};
  return specs;
}

bool feasible(const PlaneGraph& g, const ColorSpec& spec) {
  const auto r = decide_colorable(g, spec);
  EXPECT_NE(r.decision, Decision::Unknown);
  return r.decision == Decision::Colorable;
}

TEST(ColorSpec, ParseAndShape) {
  const ColorSpec s = ColorSpec::parse("0,0,3");
  EXPECT_EQ(s.num_classes(), 3);
  EXPECT_EQ(s.cap(3), 3);
  EXPECT_TRUE(s.is_unbalanced());
  EXPECT_FALSE(s.is_balanced());
  EXPECT_EQ(s.to_string(), "0,0,3");
  EXPECT_TRUE(ColorSpec::balanced(2, 5).is_balanced());
  EXPECT_EQ(ColorSpec::unbalanced(3, 7), ColorSpec({0, 0, 7}));
  EXPECT_THROW(ColorSpec::parse("1,,2"), Error);
  EXPECT_THROW(ColorSpec::parse("1,-2"), Error);
  EXPECT_THROW(ColorSpec(std::vector<int>{}), Error);
}

TEST(VerifyColoring, Examples) {
  const PlaneGraph c5 = cycle_graph(5);
  const Coloring ones(std::vector<int>(5, 1));
  EXPECT_TRUE(verify_coloring(c5, ones, ColorSpec({5, 5})).empty());
  const auto v = verify_coloring(c5, ones, ColorSpec({0, 0}));
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v[0].same_class_neighbors, 2);
  EXPECT_EQ(v[0].cap, 0);

  const PlaneGraph k4 = corpus::tetrahedron();
  EXPECT_TRUE(verify_coloring(k4, Coloring({1, 2, 3, 3}), ColorSpec({0, 0, 1})).empty());
}

TEST(VerifyColoring, Errors) {
  const PlaneGraph c5 = cycle_graph(5);
  try {
    verify_coloring(c5, Coloring({1, 1, 0, 1, 1}), ColorSpec({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PartialColoring);
  }
  try {
    verify_coloring(c5, Coloring({1, 1, 3, 1, 1}), ColorSpec({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClassOutOfRange);
  }
  EXPECT_THROW(verify_coloring(c5, Coloring(3), ColorSpec({1, 1})), Error);
}

TEST(Saturation, CountsSameClassNeighbours) {
  const PlaneGraph star = corpus::star_graph(5);
  const Coloring c(std::vector<int>(6, 1));
  EXPECT_TRUE(is_saturated(star, c, ColorSpec({5, 5}), 0));
  EXPECT_FALSE(is_saturated(star, c, ColorSpec({5, 5}), 1));
  EXPECT_EQ(same_class_counts(star, c)[0], 5);
}

TEST(DecideColorable, Examples) {
  const PlaneGraph c5 = cycle_graph(5);
  EXPECT_EQ(decide_colorable(c5, ColorSpec({0, 0})).decision, Decision::NotColorable);
  const auto r = decide_colorable(c5, ColorSpec({0, 1}));
  ASSERT_EQ(r.decision, Decision::Colorable);
  ASSERT_TRUE(r.coloring);
  EXPECT_TRUE(verify_coloring(c5, *r.coloring, ColorSpec({0, 1})).empty());
  EXPECT_EQ(decide_colorable(corpus::tetrahedron(), ColorSpec({0, 0, 0})).decision, Decision::NotColorable);
  EXPECT_EQ(decide_colorable(corpus::tetrahedron(), ColorSpec({0, 0, 0, 0})).decision, Decision::Colorable);
  EXPECT_EQ(decide_colorable(PlaneGraph::from_rotations({}), ColorSpec({0})).decision, Decision::Colorable);
}

TEST(DecideColorable, BudgetGivesUnknownNotNo) {
  SearchBudget tiny;
  tiny.max_nodes = 5;
  const auto r = decide_colorable(gen_X(1).graph, ColorSpec({0, 0, 1}), tiny);
  EXPECT_EQ(r.decision, Decision::Unknown);
  EXPECT_FALSE(r.coloring);
  EXPECT_EQ(to_string(Decision::Unknown), "unknown");
  EXPECT_EQ(to_string(Decision::NotColorable), "infeasible");
}

TEST(MinUnbalancedDefect, Examples) {
  EXPECT_EQ(min_unbalanced_defect(cycle_graph(5), 2), 1);
  EXPECT_EQ(min_unbalanced_defect(cycle_graph(6), 2), 0);
  EXPECT_EQ(min_unbalanced_defect(corpus::cube(), 2), 0);
  EXPECT_EQ(min_unbalanced_defect(corpus::tetrahedron(), 3), 1);
  EXPECT_EQ(min_unbalanced_defect(corpus::tetrahedron(), 1), 3);
  EXPECT_THROW(min_unbalanced_defect(cycle_graph(5), 0), Error);
  SearchBudget tiny;
  tiny.max_nodes = 3;
  try {
    min_unbalanced_defect(gen_X(1).graph, 3, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

// Brute force over all k^n assignments is the reference.
TEST(DecideColorable, MatchesBruteForce) {
  int graphs = 0;
  for (const auto& e : corpus::small_random_graphs(21, 120, 10)) {
    for (const auto& spec : oracle_specs()) {
      const auto expected = testing::brute_force_coloring(e.graph, spec);
      const auto r = decide_colorable(e.graph, spec);
      ASSERT_EQ(r.decision == Decision::Colorable, expected.has_value()) << e.name << " " << spec.to_string();
      if (expected) EXPECT_TRUE(verify_coloring(e.graph, *expected, spec).empty());
      if (r.coloring) EXPECT_TRUE(verify_coloring(e.graph, *r.coloring, spec).empty());
    }
    ++graphs;
  }
  EXPECT_EQ(graphs, 120);
}

TEST(DecideColorable, MonotoneInCaps) {
  std::mt19937_64 rng(77);
  for (const auto& e : corpus::small_random_graphs(31, 80, 12)) {
    const int k = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<int> caps(k);
    for (int& c : caps) c = std::uniform_int_distribution<int>(0, 2)(rng);
    if (!feasible(e.graph, ColorSpec(caps))) continue;
    for (int i = 0; i < k; ++i) {
      auto bigger = caps;
      ++bigger[i];
      EXPECT_TRUE(feasible(e.graph, ColorSpec(bigger))) << e.name;
    }
    auto more = caps;
    more.push_back(0);
    EXPECT_TRUE(feasible(e.graph, ColorSpec(more))) << e.name;
  }
}

TEST(DecideColorable, InvariantUnderCapPermutation) {
  std::mt19937_64 rng(5);
  for (const auto& e : corpus::small_random_graphs(41, 80, 12)) {
    std::vector<int> caps{0, 1, 2};
    std::shuffle(caps.begin(), caps.end(), rng);
    const bool base = feasible(e.graph, ColorSpec(caps));
    std::sort(caps.begin(), caps.end());
    do {
      EXPECT_EQ(feasible(e.graph, ColorSpec(caps)), base) << e.name;
    } while (std::next_permutation(caps.begin(), caps.end()));
  }
}

TEST(Cnf, LayoutAndDecoding) {
  const PlaneGraph tri = PlaneGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}});
  const CnfFormula f = export_cnf(tri, ColorSpec({0, 0, 0}));
  EXPECT_EQ(f.num_primary_vars, 9);
  EXPECT_EQ(f.decode(1), (std::pair<Vertex, int>{0, 1}));
  EXPECT_EQ(f.decode(6), (std::pair<Vertex, int>{1, 3}));
  const std::string text = to_dimacs(f);
  EXPECT_NE(text.find("c var 6 1 3\n"), std::string::npos);
  EXPECT_NE(text.find("p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size())),
            std::string::npos);
  EXPECT_LT(text.find("c var"), text.find("p cnf"));
}

TEST(Cnf, Examples) {
  const PlaneGraph tri = PlaneGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}});
  const CnfFormula sat = export_cnf(tri, ColorSpec({0, 0, 0}));
  const auto model = testing::dpll(sat);
  ASSERT_TRUE(model);
  EXPECT_TRUE(verify_coloring(tri, decode_model(sat, *model), ColorSpec({0, 0, 0})).empty());
  EXPECT_FALSE(testing::dpll(export_cnf(cycle_graph(5), ColorSpec({0, 0}))));
}

TEST(Cnf, SequentialCounterForLargeCaps) {
  // Caps above 2 use counter variables; a 5-star with everything in one
  // class needs cap 5.
  const PlaneGraph star = corpus::star_graph(5);
  const CnfFormula tight = export_cnf(star, ColorSpec({4}));
  EXPECT_GT(tight.num_vars, tight.num_primary_vars);
  EXPECT_FALSE(testing::dpll(tight));
  EXPECT_TRUE(testing::dpll(export_cnf(star, ColorSpec({5}))));
  const PlaneGraph wheel = corpus::windmill(4);
  for (int d = 0; d <= 8; ++d) {
    EXPECT_EQ(testing::dpll(export_cnf(wheel, ColorSpec({d}))).has_value(), d >= 8) << d;
  }
}

// CNF satisfiability agrees with the solver, and every model decodes to a
// valid colouring.
TEST(Cnf, FidelityOnSmallGraphs) {
  std::vector<ColorSpec> specs = oracle_specs();
  specs.push_back(ColorSpec({3, 0}));
  specs.push_back(ColorSpec({0, 4}));
  for (const auto& e : corpus::small_random_graphs(51, 60, 10)) {
    for (const auto& spec : specs) {
      const CnfFormula f = export_cnf(e.graph, spec);
      const auto model = testing::dpll(f);
      EXPECT_EQ(model.has_value(), feasible(e.graph, spec)) << e.name << " " << spec.to_string();
      if (model) EXPECT_TRUE(verify_coloring(e.graph, decode_model(f, *model), spec).empty());
    }
  }
}

TEST(Cnf, GadgetIsUnsatisfiable) {
  EXPECT_FALSE(testing::dpll(export_cnf(gen_T(1).graph, ColorSpec({0, 1}))));
  EXPECT_FALSE(testing::dpll(export_cnf(gen_X(0).graph, ColorSpec({0, 0, 0}))));
}

}  // namespace
}  // namespace defcol
