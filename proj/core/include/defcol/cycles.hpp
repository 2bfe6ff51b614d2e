#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "defcol/plane_graph.hpp"

namespace defcol {

/// Node budget for exhaustive path searches. Zero means unlimited.
struct CycleBudget {
  std::uint64_t max_nodes = 0;
};

/// Vertex sets of the biconnected blocks that contain at least one cycle.
/// Every cycle of the graph lies inside exactly one of them.
std::vector<std::vector<Vertex>> cyclic_blocks(const PlaneGraph& g);

/// True iff g contains a cycle of exactly k vertices as a subgraph (k >= 3).
/// Throws BudgetExceeded when the search runs out of nodes.
bool has_cycle_of_length(const PlaneGraph& g, int k, CycleBudget budget = {});

/// Set of all cycle lengths in g. Throws BudgetExceeded.
std::set<int> cycle_spectrum(const PlaneGraph& g, CycleBudget budget = {});

bool is_bipartite(const PlaneGraph& g);

/// Forbidden cycle lengths: a finite set, or every odd length.
class ObstructionSet {
 public:
  static ObstructionSet all_odd() { return ObstructionSet(true, {}); }
  /// Throws InvalidParam for lengths below 3.
  static ObstructionSet of(std::set<int> lengths);
  /// Accepts "odd" or a comma-separated list such as "3,4,6".
  static ObstructionSet parse(const std::string& text);

  bool is_all_odd() const noexcept { return all_odd_; }
  const std::set<int>& lengths() const noexcept { return lengths_; }
  std::string to_string() const;

 private:
  ObstructionSet(bool all_odd, std::set<int> lengths)
      : all_odd_(all_odd), lengths_(std::move(lengths)) {}

  bool all_odd_;
  std::set<int> lengths_;
};

/// True iff g contains none of the forbidden cycles. The all-odd case is
/// decided by 2-colouring.
bool respects_obstruction_set(const PlaneGraph& g, const ObstructionSet& s,
                              CycleBudget budget = {});

}  // namespace defcol
