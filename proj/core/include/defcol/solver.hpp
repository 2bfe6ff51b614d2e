#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "defcol/coloring.hpp"
#include "defcol/plane_graph.hpp"

namespace defcol {

/// Limits for one exhaustive search. Zero disables a limit.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds max_time{0};
};

/// `Unknown` means the budget ran out; it never stands for "no".
enum class Decision { Colorable, NotColorable, Unknown };

std::string_view to_string(Decision d) noexcept;

struct SolveResult {
  Decision decision = Decision::Unknown;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

/// Exact backtracking decision of spec-colourability.
///
/// Vertices are branched in order of descending degree (ties by id). Classes
/// are tried in index order; among classes with equal caps only the lowest
/// unused one is tried, which removes the permutation symmetry. Same-class
/// neighbour counters are maintained incrementally, and every uncoloured
/// vertex touched by an assignment must keep at least one admissible class.
SolveResult decide_colorable(const PlaneGraph& g, const ColorSpec& spec,
                             const SearchBudget& budget = {});

/// Least D with g (0, ..., 0, D)-colourable using k classes. The scan stops
/// at the maximum degree, where putting everything in the last class works.
/// Throws BudgetExceeded when a step is undecided.
int min_unbalanced_defect(const PlaneGraph& g, int k, const SearchBudget& budget = {});

}  // namespace defcol
