#include "oracles.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace defcol::testing {

std::optional<Coloring> brute_force_coloring(const PlaneGraph& g, const ColorSpec& spec) {
  const int n = g.num_vertices();
  const int k = spec.num_classes();
  if (n == 0) return Coloring(0);
  std::vector<int> cls(n, 0);
  // same[v * k + c] = neighbours of v currently in class c.
  std::vector<int> same(static_cast<std::size_t>(n) * k, 0);
  for (Vertex v = 0; v < n; ++v) same[v * k] = g.degree(v);

  auto over = [&](Vertex v) { return same[v * k + cls[v]] > spec.caps()[cls[v]] ? 1 : 0; };
  int bad = 0;
  for (Vertex v = 0; v < n; ++v) bad += over(v);

  auto change = [&](Vertex v, int to) {
    bad -= over(v);
    for (Vertex u : g.neighbors(v)) bad -= over(u);
    for (Vertex u : g.neighbors(v)) {
      --same[u * k + cls[v]];
      ++same[u * k + to];
    }
    cls[v] = to;
    bad += over(v);
    for (Vertex u : g.neighbors(v)) bad += over(u);
  };

  while (true) {
    if (bad == 0) {
      std::vector<int> classes(cls.begin(), cls.end());
      for (int& c : classes) ++c;
      return Coloring(std::move(classes));
    }
    int v = 0;
    while (v < n && cls[v] == k - 1) {
      change(v, 0);
      ++v;
    }
    if (v == n) return std::nullopt;
    change(v, cls[v] + 1);
  }
}

std::set<int> subset_cycle_spectrum(const PlaneGraph& g) {
  const int n = g.num_vertices();
  if (n > 16) throw std::invalid_argument("subset oracle is limited to 16 vertices");
  const std::uint32_t full = 1u << n;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  // path[mask] = bitmask of end vertices v such that a path from the lowest
  // vertex of mask to v visits exactly mask.
  std::vector<std::uint32_t> path(full, 0);
  for (int s = 0; s < n; ++s) path[1u << s] = 1u << s;
  std::set<int> lengths;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t ends = path[mask];
    if (ends == 0) continue;
    const int s = std::countr_zero(mask);
    const int size = std::popcount(mask);
    for (int v = 0; v < n; ++v) {
      if (!(ends >> v & 1u)) continue;
      if (size >= 3 && (adj[v] >> s & 1u)) lengths.insert(size);
      // Extend only with vertices above the anchor.
      std::uint32_t next = adj[v] & ~mask & ~((1u << s) - 1u);
      while (next != 0) {
        const int u = std::countr_zero(next);
        next &= next - 1;
        path[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return lengths;
}

namespace {

struct Dpll {
  const std::vector<std::vector<int>>& clauses;
  std::vector<int> value;  // 0 unassigned, +1 true, -1 false

  int lit_value(int lit) const {
    const int v = value[std::abs(lit)];
    return lit > 0 ? v : -v;
  }

  bool solve() {
    std::vector<int> trail;
    // Unit propagation to a fixed point.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : c) {
          const int lv = lit_value(lit);
          if (lv > 0) {
            sat = true;
            break;
          }
          if (lv == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) {
          undo(trail);
          return false;
        }
        if (unassigned == 1) {
          value[std::abs(last)] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    int branch = 0;
    for (std::size_t v = 1; v < value.size(); ++v) {
      if (value[v] == 0) {
        branch = static_cast<int>(v);
        break;
      }
    }
    if (branch == 0) return true;
    for (int sign : {1, -1}) {
      value[branch] = sign;
      if (solve()) return true;
    }
    value[branch] = 0;
    undo(trail);
    return false;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) value[v] = 0;
  }
};

}  // namespace

std::optional<std::vector<bool>> dpll(const CnfFormula& f) {
  Dpll d{f.clauses, std::vector<int>(static_cast<std::size_t>(f.num_vars) + 1, 0)};
  if (!d.solve()) return std::nullopt;
  std::vector<bool> model(d.value.size(), false);
  for (std::size_t v = 1; v < d.value.size(); ++v) model[v] = d.value[v] > 0;
  return model;
}

}  // namespace defcol::testing
