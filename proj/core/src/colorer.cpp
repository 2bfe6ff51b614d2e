#include "defcol/colorer.hpp"

#include <algorithm>

#include "defcol/cycles.hpp"
#include "defcol/solver.hpp"

namespace defcol {

namespace {

constexpr int kCap = 5;
constexpr int kLow = 6;     // degree bound for the low-low edge reduction
constexpr int kHigh = 7;

int other(int cls) { return cls == 1 ? 2 : 1; }

int same_class_count(const PlaneGraph& g, const Coloring& c, Vertex v) {
  int n = 0;
  for (Vertex u : g.neighbors(v)) {
    if (c[u] == c[v]) ++n;
  }
  return n;
}

void erase_neighbor(std::vector<PlaneGraph::Rotation>& rot, Vertex v, Vertex u) {
  rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
}

PlaneGraph isolate(const PlaneGraph& g, Vertex v) {
  auto rot = g.rotations();
  for (Vertex u : g.neighbors(v)) erase_neighbor(rot, u, v);
  rot[v].clear();
  return PlaneGraph::from_rotations(std::move(rot));
}

std::vector<std::vector<Vertex>> nontrivial_components(const PlaneGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  for (auto& c : g.components()) {
    if (c.size() > 1) comps.push_back(std::move(c));
  }
  return comps;
}

// Terrible 3-faces at v as (2-vertex, other vertex) pairs, in rotation order.
std::vector<std::pair<Vertex, Vertex>> terrible_faces_at(const PlaneGraph& g, const FaceSet& fs, Vertex v) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::vector<int> seen;
  for (int f : fs.faces_around(v)) {
    const auto& walk = fs[f].walk;
    if (walk.size() != 3 || std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
    seen.push_back(f);
    Vertex a = -1;
    Vertex b = -1;
    for (Vertex x : walk) {
      if (x == v) continue;
      (a < 0 ? a : b) = x;
    }
    if (g.degree(a) == 2) {
      out.emplace_back(a, b);
    } else if (g.degree(b) == 2) {
      out.emplace_back(b, a);
    }
  }
  return out;
}

// New 4-cycles can only pass through an auxiliary vertex u with neighbours a, b:
// a - u - b - c - a for some c != u adjacent to both.
bool creates_c4(const PlaneGraph& h, const std::array<Vertex, 3>& us) {
  for (Vertex u : us) {
    const Vertex a = h.neighbors(u)[0];
    const Vertex b = h.neighbors(u)[1];
    for (Vertex c : h.neighbors(a)) {
      if (c != u && h.has_edge(c, b)) return true;
    }
  }
  return false;
}

class Colorer {
 public:
  explicit Colorer(const Color55Options& options) : options_(options) {}

  Color55Result result;

  Coloring run(const PlaneGraph& g) {
    struct Frame {
      ReductionStep step;
      PlaneGraph before;
    };
    std::vector<Frame> stack;
    PlaneGraph cur = g;
    Coloring base;
    while (true) {
      if (cur.num_edges() == 0) {
        base = Coloring(std::vector<int>(cur.num_vertices(), 1));
        break;
      }
      auto step = find_reduction(cur);
      if (!step) {
        if (!options_.fallback_solver) {
          throw IrreducibleGraphError(cur, "no reduction applies to a graph with " + std::to_string(cur.num_edges()) +
                                               " edges");
        }
        base = fallback(cur);
        break;
      }
      ++result.steps[step->kind];
      if (step->kind == ReductionKind::ComponentSplit) {
        base = split(cur);
        break;
      }
      if (!(reduction_measure(step->reduced) < reduction_measure(cur))) {
        throw Error(ErrorCode::InvariantViolated,
                    std::string("measure did not decrease after ") + std::string(to_string(step->kind)));
      }
      if (step->kind == ReductionKind::ReplaceThreeVertex) {
        if (!is_planar_embedding(step->reduced)) {
          throw Error(ErrorCode::InvariantViolated, "3-vertex replacement broke the embedding");
        }
        if (creates_c4(step->reduced, step->auxiliary)) {
          throw Error(ErrorCode::InvariantViolated, "3-vertex replacement created a 4-cycle");
        }
      }
      PlaneGraph next = step->reduced;
      stack.push_back({std::move(*step), std::move(cur)});
      cur = std::move(next);
    }

    Coloring c = std::move(base);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) c = extend(it->step, it->before, c);
    return c;
  }

 private:
  static Coloring extend(const ReductionStep& s, const PlaneGraph& g, const Coloring& c) {
    const auto& w = s.witness;
    switch (s.kind) {
      case ReductionKind::DropOneVertex: {
        Coloring out = c;
        out.assign(w[0], other(c[w[1]]));
        return out;
      }
      case ReductionKind::DropEdgeLowLow:
        return extend_after_drop_edge(g, c, w[0], w[1]);
      case ReductionKind::ReplaceThreeVertex:
        return extend_after_replace_3vertex(g, c, w[0], {w[1], w[2], w[3]}, s.auxiliary);
      case ReductionKind::DropTerribleTwoVertex:
        return extend_after_drop_terrible(g, c, w[0], w[1], w[2]);
      case ReductionKind::ComponentSplit:
        break;
    }
    throw Error(ErrorCode::InvariantViolated, "split steps are not extended");
  }

  Coloring split(const PlaneGraph& g) {
    Coloring out(std::vector<int>(g.num_vertices(), 1));
    for (const auto& comp : nontrivial_components(g)) {
      const Coloring part = run(g.induced(comp));
      for (std::size_t i = 0; i < comp.size(); ++i) out.assign(comp[i], part[static_cast<Vertex>(i)]);
    }
    return out;
  }

  Coloring fallback(const PlaneGraph& g) {
    ++result.fallback_uses;
    const auto r = decide_colorable(g, ColorSpec::balanced(2, kCap));
    if (r.decision == Decision::Colorable) return *r.coloring;
    if (r.decision == Decision::Unknown) throw Error(ErrorCode::BudgetExceeded, "fallback solver ran out of budget");
    throw Error(ErrorCode::InvariantViolated, "fallback solver found no (5,5)-colouring");
  }

  Color55Options options_;
};

}  // namespace

std::string_view to_string(ReductionKind k) noexcept {
  switch (k) {
    case ReductionKind::ComponentSplit: return "component-split";
    case ReductionKind::DropOneVertex: return "drop-1-vertex";
    case ReductionKind::DropEdgeLowLow: return "drop-edge-low-low";
    case ReductionKind::ReplaceThreeVertex: return "replace-3-vertex";
    case ReductionKind::DropTerribleTwoVertex: return "drop-terrible-2-vertex";
  }
  return "?";
}

std::pair<int, int> reduction_measure(const PlaneGraph& g) {
  int high = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= 3) ++high;
  }
  return {high, g.num_edges()};
}

std::optional<ReductionStep> find_reduction(const PlaneGraph& g) {
  if (nontrivial_components(g).size() >= 2) {
    ReductionStep s;
    s.kind = ReductionKind::ComponentSplit;
    return s;
  }
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) return reduce_drop_one_vertex(g, v);
  }
  for (const auto& [x, y] : g.edges()) {
    if (g.degree(x) <= kLow && g.degree(y) <= kLow) return reduce_drop_edge(g, x, y);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 3) return reduce_replace_3vertex(g, v);
  }
  if (!g.has_embedding()) return std::nullopt;
  const FaceSet fs = FaceSet::trace_all(g);
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < kHigh) continue;
    const int t = static_cast<int>(terrible_faces_at(g, fs, v).size());
    if (t > std::min(d / 2, d - 6)) return reduce_drop_terrible(g, v);
  }
  return std::nullopt;
}

ReductionStep reduce_drop_one_vertex(const PlaneGraph& g, Vertex v) {
  if (g.degree(v) != 1) throw Error(ErrorCode::InvalidParam, "vertex " + std::to_string(v) + " is not a 1-vertex");
  ReductionStep s;
  s.kind = ReductionKind::DropOneVertex;
  s.witness = {v, g.neighbors(v)[0]};
  s.reduced = isolate(g, v);
  return s;
}

ReductionStep reduce_drop_edge(const PlaneGraph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) throw Error(ErrorCode::InvalidParam, "no edge " + std::to_string(x) + "-" + std::to_string(y));
  ReductionStep s;
  s.kind = ReductionKind::DropEdgeLowLow;
  s.witness = {x, y};
  s.reduced = g.without_edge(x, y);
  return s;
}

ReductionStep reduce_replace_3vertex(const PlaneGraph& g, Vertex v) {
  if (g.degree(v) != 3) throw Error(ErrorCode::InvalidParam, "vertex " + std::to_string(v) + " is not a 3-vertex");
  const int n = g.num_vertices();
  const auto r = g.rotation(v);
  const std::array<Vertex, 3> vs{r[0], r[1], r[2]};
  const std::array<Vertex, 3> us{n, n + 1, n + 2};
  auto rot = g.rotations();
  rot[v].clear();
  for (int i = 0; i < 3; ++i) {
    // v_i sees u_i (towards v_{i+1}) where v was, then u_{i-1}.
    auto& ri = rot[vs[i]];
    auto pos = std::find(ri.begin(), ri.end(), v);
    *pos = us[i];
    ri.insert(pos + 1, us[(i + 2) % 3]);
  }
  for (int i = 0; i < 3; ++i) rot.push_back({vs[i], vs[(i + 1) % 3]});
  ReductionStep s;
  s.kind = ReductionKind::ReplaceThreeVertex;
  s.witness = {v, vs[0], vs[1], vs[2]};
  s.auxiliary = us;
  s.reduced = PlaneGraph::from_rotations(std::move(rot));
  return s;
}

ReductionStep reduce_drop_terrible(const PlaneGraph& g, Vertex v) {
  const auto terrible = terrible_faces_at(g, FaceSet::trace_all(g), v);
  if (terrible.empty()) {
    throw Error(ErrorCode::InvalidParam, "vertex " + std::to_string(v) + " is on no terrible 3-face");
  }
  const auto [w, u] = terrible.front();
  ReductionStep s;
  s.kind = ReductionKind::DropTerribleTwoVertex;
  s.witness = {w, v, u};
  s.terrible_pairs.assign(terrible.begin() + 1, terrible.end());
  s.reduced = isolate(g, w);
  return s;
}

Coloring extend_after_drop_edge(const PlaneGraph& g, const Coloring& coloring, Vertex x, Vertex y) {
  if (coloring[x] != coloring[y]) return coloring;
  // In g - xy the endpoints do not see each other, so subtract one.
  const bool x_saturated = same_class_count(g, coloring, x) - 1 >= kCap;
  const bool y_saturated = same_class_count(g, coloring, y) - 1 >= kCap;
  Coloring out = coloring;
  if (x_saturated) out.assign(x, other(coloring[x]));
  if (y_saturated) out.assign(y, other(coloring[y]));
  return out;
}

int choose_class_after_replace(const std::array<int, 3>& v_class, const std::array<int, 3>& u_class) {
  if (v_class[0] == v_class[1] && v_class[1] == v_class[2]) return other(v_class[0]);
  int odd = 0;
  if (v_class[0] == v_class[1]) {
    odd = 2;
  } else if (v_class[0] == v_class[2]) {
    odd = 1;
  }
  const int a = v_class[odd];
  // u_{odd} and u_{odd-1} are the path vertices next to v_odd.
  if (u_class[odd] == a || u_class[(odd + 2) % 3] == a) return a;
  return other(a);
}

Coloring extend_after_replace_3vertex(const PlaneGraph& g, const Coloring& coloring_on_h, Vertex v,
                                      const std::array<Vertex, 3>& vs, const std::array<Vertex, 3>& us) {
  std::array<int, 3> vc{};
  std::array<int, 3> uc{};
  for (int i = 0; i < 3; ++i) {
    vc[i] = coloring_on_h[vs[i]];
    uc[i] = coloring_on_h[us[i]];
  }
  std::vector<int> classes(coloring_on_h.classes().begin(), coloring_on_h.classes().begin() + g.num_vertices());
  Coloring out(std::move(classes));
  out.assign(v, choose_class_after_replace(vc, uc));
  return out;
}

Coloring extend_after_drop_terrible(const PlaneGraph& g, const Coloring& coloring, Vertex w, Vertex v, Vertex u) {
  Coloring out = coloring;
  if (coloring[u] == coloring[v]) {
    out.assign(w, other(coloring[v]));
    return out;
  }
  const int b = coloring[v];
  int v_count = 0;
  for (Vertex z : g.neighbors(v)) {
    if (z != w && coloring[z] == b) ++v_count;
  }
  out.assign(w, b);
  if (v_count < kCap) return out;

  const FaceSet fs = FaceSet::trace_all(g);
  for (const auto& [x, y] : terrible_faces_at(g, fs, v)) {
    if (x == w || y == w) continue;
    if (coloring[x] == b && coloring[y] == b) {
      out.assign(x, other(b));
      return out;
    }
  }
  throw Error(ErrorCode::ExtensionWitnessMissing,
              "vertex " + std::to_string(v) + " is saturated and has no terrible face to recolour");
}

Color55Result color55(const PlaneGraph& g, const Color55Options& options) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "the colourer needs a rotation system");
  if (!is_planar_embedding(g)) throw Error(ErrorCode::NotPlanar, "rotation system fails V - E + F = 2");
  if (has_cycle_of_length(g, 4)) throw Error(ErrorCode::ContainsC4, "the colourer needs a graph without 4-cycles");
  Colorer colorer(options);
  Coloring c = colorer.run(g);
  if (!verify_coloring(g, c, ColorSpec::balanced(2, kCap)).empty()) {
    throw Error(ErrorCode::InvariantViolated, "extension produced an invalid (5,5)-colouring");
  }
  colorer.result.coloring = std::move(c);
  return std::move(colorer.result);
}

}  // namespace defcol
