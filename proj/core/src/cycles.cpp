#include "defcol/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "defcol/error.hpp"

namespace defcol {

namespace {

/// One biconnected block, renumbered 0..n-1 in increasing original id.
struct LocalBlock {
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }
  bool adjacent(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }
};

LocalBlock localize(const PlaneGraph& g, const std::vector<Vertex>& block) {
  LocalBlock lb;
  lb.adj.resize(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (Vertex u : g.neighbors(block[i])) {
      auto it = std::lower_bound(block.begin(), block.end(), u);
      if (it != block.end() && *it == u) lb.adj[i].push_back(static_cast<int>(it - block.begin()));
    }
    std::sort(lb.adj[i].begin(), lb.adj[i].end());
  }
  return lb;
}

class NodeCounter {
 public:
  explicit NodeCounter(CycleBudget budget) : limit_(budget.max_nodes) {}
  void tick() {
    if (limit_ != 0 && ++nodes_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "cycle search exceeded " + std::to_string(limit_) + " nodes");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

/// Distances from `s` inside the subgraph induced on vertices >= s.
std::vector<int> distances_above(const LocalBlock& b, int s) {
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dist(b.size(), kInf);
  std::deque<int> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : b.adj[v]) {
      if (w > s && dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Searches for a cycle of exactly k vertices whose smallest vertex is the
/// anchor. Paths only visit vertices above the anchor and are pruned when
/// the anchor is out of reach within the remaining length.
class FixedLengthSearch {
 public:
  FixedLengthSearch(const LocalBlock& b, int k, NodeCounter& counter)
      : b_(b), k_(k), counter_(counter), on_path_(b.size(), false) {}

  bool run() {
    for (int s = 0; s + k_ <= b_.size(); ++s) {
      anchor_ = s;
      dist_ = distances_above(b_, s);
      on_path_[s] = true;
      const bool found = extend(s, 1);
      on_path_[s] = false;
      if (found) return true;
    }
    return false;
  }

 private:
  // `count` vertices are on the path, ending at v.
  bool extend(int v, int count) {
    counter_.tick();
    if (count == k_) return b_.adjacent(v, anchor_);
    for (int w : b_.adj[v]) {
      if (w <= anchor_ || on_path_[w]) continue;
      // After stepping to w, k - count - 1 more edges must lead back.
      if (dist_[w] > k_ - count) continue;
      on_path_[w] = true;
      const bool found = extend(w, count + 1);
      on_path_[w] = false;
      if (found) return true;
    }
    return false;
  }

  const LocalBlock& b_;
  int k_;
  NodeCounter& counter_;
  std::vector<bool> on_path_;
  std::vector<int> dist_;
  int anchor_ = 0;
};

/// Enumerates every simple cycle once per direction, anchored at its
/// smallest vertex, recording lengths until all possible lengths are seen.
class SpectrumSearch {
 public:
  SpectrumSearch(const LocalBlock& b, NodeCounter& counter)
      : b_(b), counter_(counter), on_path_(b.size(), false) {}

  std::set<int> run() {
    for (int s = 0; s + 3 <= b_.size() && !saturated(); ++s) {
      anchor_ = s;
      on_path_[s] = true;
      extend(s, 1);
      on_path_[s] = false;
    }
    return found_;
  }

 private:
  bool saturated() const { return static_cast<int>(found_.size()) == b_.size() - 2; }

  void extend(int v, int count) {
    counter_.tick();
    if (count >= 3 && b_.adjacent(v, anchor_)) found_.insert(count);
    if (saturated()) return;
    for (int w : b_.adj[v]) {
      if (w <= anchor_ || on_path_[w]) continue;
      on_path_[w] = true;
      extend(w, count + 1);
      on_path_[w] = false;
      if (saturated()) return;
    }
  }

  const LocalBlock& b_;
  NodeCounter& counter_;
  std::vector<bool> on_path_;
  std::set<int> found_;
  int anchor_ = 0;
};

}  // namespace

std::vector<std::vector<Vertex>> cyclic_blocks(const PlaneGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    int next;
  };
  std::vector<Frame> stack;
  int time = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = time++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.degree(f.v)) {
        const Vertex w = g.neighbors(f.v)[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Vertex> block;
        std::size_t edge_count = 0;
        while (!edge_stack.empty()) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          ++edge_count;
          if (e == std::pair<Vertex, Vertex>{p, v}) break;
        }
        if (edge_count >= 3) {
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool has_cycle_of_length(const PlaneGraph& g, int k, CycleBudget budget) {
  if (k < 3) throw Error(ErrorCode::InvalidParam, "cycle length must be at least 3");
  NodeCounter counter(budget);
  for (const auto& block : cyclic_blocks(g)) {
    if (static_cast<int>(block.size()) < k) continue;
    const LocalBlock lb = localize(g, block);
    if (FixedLengthSearch(lb, k, counter).run()) return true;
  }
  return false;
}

std::set<int> cycle_spectrum(const PlaneGraph& g, CycleBudget budget) {
  NodeCounter counter(budget);
  std::set<int> lengths;
  for (const auto& block : cyclic_blocks(g)) {
    const LocalBlock lb = localize(g, block);
    lengths.merge(SpectrumSearch(lb, counter).run());
  }
  return lengths;
}

bool is_bipartite(const PlaneGraph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

ObstructionSet ObstructionSet::of(std::set<int> lengths) {
  for (int k : lengths) {
    if (k < 3) throw Error(ErrorCode::InvalidParam, "cycle length " + std::to_string(k) + " < 3");
  }
  return ObstructionSet(false, std::move(lengths));
}

ObstructionSet ObstructionSet::parse(const std::string& text) {
  if (text == "odd" || text == "ALL_ODD") return all_odd();
  std::set<int> lengths;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      lengths.insert(k);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidParam, "bad cycle length '" + item + "'");
    }
  }
  if (lengths.empty()) throw Error(ErrorCode::InvalidParam, "empty obstruction set");
  return of(std::move(lengths));
}

std::string ObstructionSet::to_string() const {
  if (all_odd_) return "odd";
  std::string out;
  for (int k : lengths_) {
    if (!out.empty()) out += ',';
    out += std::to_string(k);
  }
  return out;
}

bool respects_obstruction_set(const PlaneGraph& g, const ObstructionSet& s, CycleBudget budget) {
  if (s.is_all_odd()) return is_bipartite(g);
  for (int k : s.lengths()) {
    if (has_cycle_of_length(g, k, budget)) return false;
  }
  return true;
}

}  // namespace defcol
