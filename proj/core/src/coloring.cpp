#include "defcol/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "defcol/error.hpp"

namespace defcol {

ColorSpec::ColorSpec(std::vector<int> caps) : caps_(std::move(caps)) {
  if (caps_.empty()) throw Error(ErrorCode::InvalidParam, "a colour spec needs at least one class");
  for (int d : caps_) {
    if (d < 0) throw Error(ErrorCode::InvalidParam, "defect caps must be nonnegative");
  }
}

ColorSpec ColorSpec::parse(const std::string& text) {
  std::vector<int> caps;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      caps.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidParam, "bad defect cap '" + item + "' in spec '" + text + "'");
    }
  }
  return ColorSpec(std::move(caps));
}

ColorSpec ColorSpec::unbalanced(int k, int d) {
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be at least 1");
  std::vector<int> caps(static_cast<std::size_t>(k), 0);
  caps.back() = d;
  return ColorSpec(std::move(caps));
}

bool ColorSpec::is_balanced() const noexcept {
  return std::adjacent_find(caps_.begin(), caps_.end(), std::not_equal_to<>()) == caps_.end();
}

bool ColorSpec::is_unbalanced() const noexcept {
  return std::all_of(caps_.begin(), caps_.end() - 1, [](int d) { return d == 0; });
}

std::string ColorSpec::to_string() const {
  std::string out;
  for (int d : caps_) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

bool Coloring::is_total() const noexcept {
  return std::none_of(classes_.begin(), classes_.end(), [](int c) { return c == kUncolored; });
}

std::vector<int> same_class_counts(const PlaneGraph& g, const Coloring& coloring) {
  std::vector<int> count(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!coloring.is_colored(v)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (coloring[u] == coloring[v]) ++count[v];
    }
  }
  return count;
}

std::vector<Violation> verify_coloring(const PlaneGraph& g, const Coloring& coloring,
                                       const ColorSpec& spec) {
  if (coloring.size() != g.num_vertices()) {
    throw Error(ErrorCode::PartialColoring, "colouring covers " + std::to_string(coloring.size()) +
                                                " of " + std::to_string(g.num_vertices()) + " vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!coloring.is_colored(v)) {
      throw Error(ErrorCode::PartialColoring, "vertex " + std::to_string(v) + " is uncoloured");
    }
    if (coloring[v] < 1 || coloring[v] > spec.num_classes()) {
      throw Error(ErrorCode::ClassOutOfRange, "vertex " + std::to_string(v) + " has class " +
                                                  std::to_string(coloring[v]));
    }
  }
  std::vector<Violation> out;
  const auto count = same_class_counts(g, coloring);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int cap = spec.cap(coloring[v]);
    if (count[v] > cap) out.push_back({v, coloring[v], count[v], cap});
  }
  return out;
}

bool is_saturated(const PlaneGraph& g, const Coloring& coloring, const ColorSpec& spec, Vertex v) {
  if (!coloring.is_colored(v)) return false;
  int same = 0;
  for (Vertex u : g.neighbors(v)) {
    if (coloring[u] == coloring[v]) ++same;
  }
  return same >= spec.cap(coloring[v]);
}

}  // namespace defcol
