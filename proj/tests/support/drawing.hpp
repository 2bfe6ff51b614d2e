#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "defcol/plane_graph.hpp"

namespace defcol::testing {

/// Straight-line drawing used to build local configurations: the rotation
/// system is read off the angles, so any crossing-free picture is planar.
class Drawing {
 public:
  Vertex point(double x, double y) {
    coords_.emplace_back(x, y);
    return static_cast<Vertex>(coords_.size() - 1);
  }

  Vertex polar(double r, double degrees) {
    const double t = degrees * std::numbers::pi / 180.0;
    return point(r * std::cos(t), r * std::sin(t));
  }

  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  /// `count` pendant vertices around v, spread over the angle range
  /// [from, to] at distance `r`.
  std::vector<Vertex> leaves(Vertex v, int count, double from, double to, double r = 0.3) {
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) {
      const double a = count == 1 ? (from + to) / 2 : from + (to - from) * i / (count - 1);
      const double t = a * std::numbers::pi / 180.0;
      const Vertex leaf = point(coords_[v].first + r * std::cos(t), coords_[v].second + r * std::sin(t));
      edge(v, leaf);
      out.push_back(leaf);
    }
    return out;
  }

  /// Regular polygon; consecutive vertices are joined.
  std::vector<Vertex> polygon(int n, double r, double phase = 90.0) {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back(polar(r, phase + 360.0 * i / n));
    for (int i = 0; i < n; ++i) edge(vs[i], vs[(i + 1) % n]);
    return vs;
  }

  /// Direction from the origin to v, in degrees.
  double angle_of(Vertex v) const {
    return std::atan2(coords_[v].second, coords_[v].first) * 180.0 / std::numbers::pi;
  }

  PlaneGraph build() const { return from_straight_line(coords_, edges_); }

 private:
  std::vector<std::pair<double, double>> coords_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Pendants pointing away from the origin, `spread` degrees wide.
inline std::vector<Vertex> outward_leaves(Drawing& d, Vertex v, int count, double spread = 60.0,
                                          double r = 0.3) {
  const double a = d.angle_of(v);
  return d.leaves(v, count, a - spread / 2, a + spread / 2, r);
}

}  // namespace defcol::testing
