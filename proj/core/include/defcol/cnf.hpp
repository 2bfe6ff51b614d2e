#pragma once

#include <string>
#include <utility>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/plane_graph.hpp"

namespace defcol {

/// CNF instance whose models are exactly the spec-colourings of a graph.
///
/// Variable x_{v,i} (class i in 1..k) is numbered v*k + i. Auxiliary counter
/// variables follow the primary ones.
struct CnfFormula {
  int num_vars = 0;
  int num_primary_vars = 0;
  int num_classes = 0;
  std::vector<std::vector<int>> clauses;

  /// (vertex, class) for primary variable `var`.
  std::pair<Vertex, int> decode(int var) const;
};

CnfFormula export_cnf(const PlaneGraph& g, const ColorSpec& spec);

/// DIMACS text. The decoding map precedes the problem line as `c var v i`
/// comment lines.
std::string to_dimacs(const CnfFormula& f);

/// Colouring read off a model; `model[var]` is the value of variable var
/// (index 0 unused).
Coloring decode_model(const CnfFormula& f, const std::vector<bool>& model);

}  // namespace defcol
