#pragma once

#include <string>
#include <vector>

#include "defcol/plane_graph.hpp"

namespace defcol {

/// Per-class defect caps (d1, ..., dk): class i may induce maximum degree d_i.
class ColorSpec {
 public:
  /// Throws InvalidParam when empty or when a cap is negative.
  explicit ColorSpec(std::vector<int> caps);

  /// Parses "d1,d2,...,dk".
  static ColorSpec parse(const std::string& text);
  static ColorSpec balanced(int k, int d) { return ColorSpec(std::vector<int>(k, d)); }
  /// (0, ..., 0, d) with k entries.
  static ColorSpec unbalanced(int k, int d);

  int num_classes() const noexcept { return static_cast<int>(caps_.size()); }
  /// Cap of class `cls` (1-based).
  int cap(int cls) const { return caps_.at(cls - 1); }
  const std::vector<int>& caps() const noexcept { return caps_; }

  bool is_balanced() const noexcept;
  bool is_unbalanced() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ColorSpec&, const ColorSpec&) = default;

 private:
  std::vector<int> caps_;
};

/// Assignment of a class in 1..k to each vertex; 0 marks an uncoloured vertex.
class Coloring {
 public:
  static constexpr int kUncolored = 0;

  Coloring() = default;
  explicit Coloring(int n) : classes_(static_cast<std::size_t>(n), kUncolored) {}
  explicit Coloring(std::vector<int> classes) : classes_(std::move(classes)) {}

  int size() const noexcept { return static_cast<int>(classes_.size()); }
  int operator[](Vertex v) const { return classes_.at(v); }
  void assign(Vertex v, int cls) { classes_.at(v) = cls; }
  bool is_colored(Vertex v) const { return classes_.at(v) != kUncolored; }
  bool is_total() const noexcept;
  const std::vector<int>& classes() const noexcept { return classes_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> classes_;
};

struct Violation {
  Vertex vertex;
  int color_class;
  int same_class_neighbors;
  int cap;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff every vertex has at most cap(class) neighbours in its own class.
/// Throws PartialColoring (wrong size or uncoloured vertex) and ClassOutOfRange.
std::vector<Violation> verify_coloring(const PlaneGraph& g, const Coloring& coloring,
                                       const ColorSpec& spec);

/// Number of same-class neighbours per vertex; uncoloured vertices and
/// uncoloured neighbours count as nothing.
std::vector<int> same_class_counts(const PlaneGraph& g, const Coloring& coloring);

/// A vertex is saturated when its same-class count has reached its cap.
bool is_saturated(const PlaneGraph& g, const Coloring& coloring, const ColorSpec& spec, Vertex v);

}  // namespace defcol
