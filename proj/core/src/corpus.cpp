#include "defcol/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "defcol/cycles.hpp"
#include "defcol/error.hpp"
#include "defcol/gadgets.hpp"

namespace defcol::corpus {

namespace {

using Point = std::pair<double, double>;
using Edge = std::pair<Vertex, Vertex>;

Point polar(double r, double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {r * std::cos(t), r * std::sin(t)};
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Proper crossing of segments pq and rs that share no endpoint.
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
  const double d1 = cross(p, q, r);
  const double d2 = cross(p, q, s);
  const double d3 = cross(r, s, p);
  const double d4 = cross(r, s, q);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

// Adding ab closes a 4-cycle iff a - x - y - b is a path avoiding the new edge.
bool closes_c4(const std::vector<std::set<Vertex>>& adj, Vertex a, Vertex b) {
  for (Vertex x : adj[a]) {
    if (x == b) continue;
    for (Vertex y : adj[x]) {
      if (y != a && y != b && adj[b].contains(y)) return true;
    }
  }
  return false;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void add_gadgets(std::vector<Entry>& out) {
  auto add = [&](GadgetFamily f, int D, std::optional<int> l) {
    std::string name = std::string("gadget-") + std::string(to_string(f)) + "-D" + std::to_string(D);
    if (l) name += "-l" + std::to_string(*l);
    out.push_back({name, make_gadget(f, D, l).graph});
  };
  for (int D = 0; D <= 1; ++D) {
    add(GadgetFamily::H2, D, std::nullopt);
    add(GadgetFamily::F1, D, std::nullopt);
    add(GadgetFamily::T0, D, std::nullopt);
    add(GadgetFamily::T, D, std::nullopt);
    add(GadgetFamily::X0, D, std::nullopt);
    add(GadgetFamily::X, D, std::nullopt);
    for (int l = 1; l <= 3; ++l) {
      add(GadgetFamily::H1, D, l);
      add(GadgetFamily::H, D, l);
    }
    for (int l : {3, 5}) {
      add(GadgetFamily::Fo, D, l);
      add(GadgetFamily::Fe, D, l);
      add(GadgetFamily::F, D, l);
      add(GadgetFamily::Fprime, D, l);
    }
  }
}

}  // namespace

PlaneGraph path_graph(int n) {
  std::vector<PlaneGraph::Rotation> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParam, "a cycle needs at least 3 vertices");
  std::vector<PlaneGraph::Rotation> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph star_graph(int leaves) {
  std::vector<PlaneGraph::Rotation> rot(leaves + 1);
  for (int i = 1; i <= leaves; ++i) {
    rot[0].push_back(i);
    rot[i].push_back(0);
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph windmill(int k) {
  std::vector<PlaneGraph::Rotation> rot(2 * k + 1);
  for (int j = 0; j < k; ++j) {
    const Vertex a = 2 * j + 1;
    const Vertex b = 2 * j + 2;
    rot[0].insert(rot[0].end(), {a, b});
    rot[a] = {b, 0};
    rot[b] = {0, a};
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph tetrahedron() {
  const std::vector<Point> pts{polar(2, 90), polar(2, 210), polar(2, 330), {0, 0}};
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return from_straight_line(pts, edges);
}

PlaneGraph cube() {
  std::vector<Point> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(polar(2, 45 + 90 * i));
  for (int i = 0; i < 4; ++i) pts.push_back(polar(1, 45 + 90 * i));
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, 4 + i);
  }
  return from_straight_line(pts, edges);
}

PlaneGraph octahedron() {
  std::vector<Point> pts;
  for (int i = 0; i < 3; ++i) pts.push_back(polar(3, 90 + 120 * i));
  for (int i = 0; i < 3; ++i) pts.push_back(polar(1, 150 + 120 * i));
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    edges.emplace_back(i, (i + 1) % 3);
    edges.emplace_back(3 + i, 3 + (i + 1) % 3);
    edges.emplace_back(i, 3 + i);
    edges.emplace_back((i + 1) % 3, 3 + i);
  }
  return from_straight_line(pts, edges);
}

PlaneGraph dodecahedron() {
  // Outer pentagon (0-4), ring of ten (5-14), inner pentagon (15-19).
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(polar(3, 90 + 72 * i));
  for (int j = 0; j < 10; ++j) pts.push_back(polar(2, 90 + 36 * j));
  for (int i = 0; i < 5; ++i) pts.push_back(polar(1, 126 + 72 * i));
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + 2 * i);
    edges.emplace_back(5 + 2 * i + 1, 15 + i);
    edges.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  return from_straight_line(pts, edges);
}

PlaneGraph random_tree(int n, Rng& rng) {
  std::vector<PlaneGraph::Rotation> rot(n);
  for (int v = 1; v < n; ++v) {
    const int parent = uniform(rng, 0, v - 1);
    auto& rp = rot[parent];
    rp.insert(rp.begin() + uniform(rng, 0, static_cast<int>(rp.size())), v);
    rot[v].push_back(parent);
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph random_outerplanar_c4_free(int n, int attempts, Rng& rng) {
  if (n < 3) throw Error(ErrorCode::InvalidParam, "outerplanar samples need at least 3 vertices");
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(polar(1, 360.0 * i / n));
  std::vector<std::set<Vertex>> adj(n);
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    adj[a].insert(b);
    adj[b].insert(a);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int i = 0; i < n; ++i) add(i, (i + 1) % n);
  if (n == 4) return cycle_graph(4);
  std::vector<Edge> chords;
  for (int t = 0; t < attempts; ++t) {
    Vertex a = uniform(rng, 0, n - 1);
    Vertex b = uniform(rng, 0, n - 1);
    if (a > b) std::swap(a, b);
    if (b - a < 2 || (a == 0 && b == n - 1) || adj[a].contains(b)) continue;
    const bool crossing = std::any_of(chords.begin(), chords.end(), [&](const Edge& c) {
      return (a < c.first && c.first < b && b < c.second) || (c.first < a && a < c.second && c.second < b);
    });
    if (crossing || closes_c4(adj, a, b)) continue;
    add(a, b);
    chords.emplace_back(a, b);
  }
  return from_straight_line(pts, edges);
}

PlaneGraph random_plane_c4_free(int n, int hubs, Rng& rng) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  struct Candidate {
    bool plain;
    double length;
    Vertex a, b;
  };
  std::vector<Candidate> cand;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const double dx = pts[a].first - pts[b].first;
      const double dy = pts[a].second - pts[b].second;
      cand.push_back({a >= hubs, std::hypot(dx, dy), a, b});
    }
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.plain, x.length, x.a, x.b) < std::tie(y.plain, y.length, y.a, y.b);
  });
  std::vector<std::set<Vertex>> adj(n);
  std::vector<Edge> edges;
  for (const auto& c : cand) {
    if (closes_c4(adj, c.a, c.b)) continue;
    const bool crossing = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
      if (e.first == c.a || e.first == c.b || e.second == c.a || e.second == c.b) return false;
      return segments_cross(pts[c.a], pts[c.b], pts[e.first], pts[e.second]);
    });
    if (crossing) continue;
    adj[c.a].insert(c.b);
    adj[c.b].insert(c.a);
    edges.emplace_back(c.a, c.b);
  }
  return from_straight_line(pts, edges);
}

PlaneGraph subdivide(const PlaneGraph& g, int times) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "subdivision keeps the rotation system");
  auto rot = g.rotations();
  for (const auto& [u, v] : g.edges()) {
    std::vector<Vertex> inner;
    for (int t = 0; t < times; ++t) {
      inner.push_back(static_cast<Vertex>(rot.size()));
      rot.emplace_back();
    }
    if (inner.empty()) continue;
    *std::find(rot[u].begin(), rot[u].end(), v) = inner.front();
    *std::find(rot[v].begin(), rot[v].end(), u) = inner.back();
    for (std::size_t t = 0; t < inner.size(); ++t) {
      rot[inner[t]] = {t == 0 ? u : inner[t - 1], t + 1 == inner.size() ? v : inner[t + 1]};
    }
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph glue_at_vertex(const PlaneGraph& a, Vertex va, const PlaneGraph& b, Vertex vb) {
  const int na = a.num_vertices();
  std::vector<Vertex> map(b.num_vertices());
  int next = na;
  for (Vertex v = 0; v < b.num_vertices(); ++v) map[v] = v == vb ? va : next++;
  auto rot = a.rotations();
  rot.resize(next);
  for (Vertex v = 0; v < b.num_vertices(); ++v) {
    for (Vertex u : b.rotation(v)) rot[map[v]].push_back(map[u]);
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph join_by_edge(const PlaneGraph& a, Vertex va, const PlaneGraph& b, Vertex vb) {
  const int na = a.num_vertices();
  auto rot = a.rotations();
  for (Vertex v = 0; v < b.num_vertices(); ++v) {
    PlaneGraph::Rotation r;
    for (Vertex u : b.rotation(v)) r.push_back(u + na);
    rot.push_back(std::move(r));
  }
  rot[va].push_back(vb + na);
  rot[vb + na].push_back(va);
  return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph hub_annulus(int n, Rng& rng) {
  if (n < 14) throw Error(ErrorCode::InvalidParam, "hub_annulus needs n >= 14");
  // Layout: inner hubs a_i = i, outer hubs b_j = n + j; b_j sits between
  // a_{j-1} and a_j. Every other vertex is appended as it is created.
  std::vector<PlaneGraph::Rotation> rot(2 * n);
  auto fresh = [&](PlaneGraph::Rotation r) {
    rot.push_back(std::move(r));
    return static_cast<Vertex>(rot.size() - 1);
  };
  auto a = [n](int i) { return static_cast<Vertex>(((i % n) + n) % n); };
  auto b = [n](int j) { return static_cast<Vertex>(n + ((j % n) + n) % n); };

  std::vector<Vertex> inner_tip(n), outer_tip(n), rung_left(n), rung_right(n);
  for (int i = 0; i < n; ++i) {
    inner_tip[i] = fresh({a(i + 1), a(i)});
    outer_tip[i] = fresh({b(i + 1), b(i)});
    rung_left[i] = fresh({a(i), b(i)});
    rung_right[i] = fresh({a(i), b(i + 1)});
  }

  // Two centres on each side split the ring; a 3-vertex joins both centres
  // to the hub at the split. `mirror` reverses orientation for the outside.
  std::vector<Vertex> inner_link(n), outer_link(n);
  auto centres = [&](auto hub, std::vector<Vertex>& link, bool mirror) {
    const int m = uniform(rng, 6, n - 7);
    const Vertex c1 = fresh({}), c2 = fresh({}), y = fresh({});
    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      const Vertex c = k < m ? c1 : c2;
      link[k] = fresh({c, hub(k)});
      rot[c].push_back(link[k]);
    }
    link[m] = y;
    rot[c1].push_back(y);
    rot[c2].push_back(y);
    rot[y] = {c1, hub(m), c2};
    if (mirror) {
      for (Vertex v : {c1, c2, y}) std::reverse(rot[v].begin(), rot[v].end());
    }
  };
  centres(a, inner_link, false);
  centres(b, outer_link, true);

  for (int i = 0; i < n; ++i) {
    rot[a(i)] = {a(i + 1), inner_tip[i], inner_link[i], inner_tip[(i + n - 1) % n], a(i - 1), rung_left[i],
                 rung_right[i]};
    rot[b(i)] = {b(i + 1), rung_left[i], rung_right[(i + n - 1) % n], b(i - 1), outer_tip[(i + n - 1) % n],
                 outer_link[i], outer_tip[i]};
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

std::vector<Entry> standard_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Entry> out;
  out.push_back({"path-2", path_graph(2)});
  out.push_back({"path-5", path_graph(5)});
  for (int n = 3; n <= 8; ++n) out.push_back({"cycle-" + std::to_string(n), cycle_graph(n)});
  out.push_back({"star-3", star_graph(3)});
  out.push_back({"star-6", star_graph(6)});
  out.push_back({"windmill-3", windmill(3)});
  out.push_back({"windmill-8", windmill(8)});
  out.push_back({"tetrahedron", tetrahedron()});
  out.push_back({"cube", cube()});
  out.push_back({"octahedron", octahedron()});
  out.push_back({"dodecahedron", dodecahedron()});
  out.push_back({"subdivided-cube", subdivide(cube())});
  out.push_back({"subdivided-dodecahedron", subdivide(dodecahedron())});
  for (int n : {6, 15, 40}) out.push_back({"tree-" + std::to_string(n), random_tree(n, rng)});
  for (int n : {7, 12, 30}) {
    out.push_back({"outerplanar-" + std::to_string(n), random_outerplanar_c4_free(n, 3 * n, rng)});
  }
  for (int n : {10, 25, 60}) {
    out.push_back({"plane-" + std::to_string(n), random_plane_c4_free(n, n / 10, rng)});
  }
  out.push_back({"glued-cycle5-windmill3", glue_at_vertex(cycle_graph(5), 0, windmill(3), 0)});
  out.push_back({"joined-cube-dodecahedron", join_by_edge(cube(), 0, dodecahedron(), 0)});
  out.push_back({"hub-annulus-14", hub_annulus(14, rng)});
  add_gadgets(out);
  return out;
}

std::vector<Entry> c4_free_corpus(std::uint64_t seed, int count, int max_vertices) {
  Rng rng(seed);
  std::vector<Entry> out;
  auto push = [&](std::string name, PlaneGraph g) {
    if (static_cast<int>(out.size()) >= count || g.num_vertices() > max_vertices) return;
    if (has_cycle_of_length(g, 4)) return;
    out.push_back({std::move(name), std::move(g)});
  };
  for (int D = 0; D <= 1; ++D) {
    for (int l : {3, 5}) {
      push("F-D" + std::to_string(D) + "-l" + std::to_string(l), gen_F(D, l).graph);
      push("Fprime-D" + std::to_string(D) + "-l" + std::to_string(l), gen_Fprime(D, l).graph);
    }
  }
  for (int D = 0; D <= 3; ++D) push("T-D" + std::to_string(D), gen_T(D).graph);
  push("dodecahedron", dodecahedron());
  push("subdivided-tetrahedron", subdivide(tetrahedron()));
  push("subdivided-cube", subdivide(cube()));
  push("subdivided-octahedron", subdivide(octahedron()));
  push("subdivided-dodecahedron", subdivide(dodecahedron()));
  for (int k = 2; k <= 12; k += 2) push("windmill-" + std::to_string(k), windmill(k));
  for (int n : {3, 5, 7, 9}) push("cycle-" + std::to_string(n), cycle_graph(n));
  const int widest_annulus = std::min(24, (max_vertices - 4) / 8);
  if (widest_annulus >= 14) push("hub-annulus-14", hub_annulus(14, rng));

  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const std::string tag = "-" + std::to_string(i);
    switch (i % 7) {
      case 0: {
        const int n = uniform(rng, 5, max_vertices);
        push("outerplanar" + tag, random_outerplanar_c4_free(n, 2 * n, rng));
        break;
      }
      case 1: {
        const int n = uniform(rng, 10, max_vertices);
        push("plane" + tag, random_plane_c4_free(n, uniform(rng, 0, 4), rng));
        break;
      }
      case 2: {
        const int n = uniform(rng, 4, max_vertices / 3);
        push("subdivided-plane" + tag, subdivide(random_plane_c4_free(n, uniform(rng, 0, 2), rng)));
        break;
      }
      case 3:
        push("tree" + tag, random_tree(uniform(rng, 2, max_vertices), rng));
        break;
      case 4: {
        const auto a = random_plane_c4_free(uniform(rng, 5, max_vertices / 2), 1, rng);
        const auto b = windmill(uniform(rng, 2, 9));
        push("glued-plane-windmill" + tag, glue_at_vertex(a, 0, b, 0));
        break;
      }
      case 5: {
        const auto a = random_outerplanar_c4_free(uniform(rng, 5, max_vertices / 2), 40, rng);
        const auto b = gen_T(uniform(rng, 0, 3)).graph;
        push("joined-outerplanar-T" + tag, join_by_edge(a, 0, b, 0));
        break;
      }
      case 6:
        if (widest_annulus >= 14) push("hub-annulus" + tag, hub_annulus(uniform(rng, 14, widest_annulus), rng));
        break;
    }
  }
  return out;
}

std::vector<Entry> small_random_graphs(std::uint64_t seed, int count, int max_vertices) {
  Rng rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Entry> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform(rng, 1, max_vertices);
    const double p = density(rng);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (coin(rng) < p) edges.emplace_back(a, b);
      }
    }
    out.push_back({"gnp-" + std::to_string(i), PlaneGraph::from_edges(n, edges)});
  }
  return out;
}

}  // namespace defcol::corpus
