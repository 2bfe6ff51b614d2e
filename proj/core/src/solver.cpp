#include "defcol/solver.hpp"

#include <algorithm>
#include <numeric>

#include "defcol/error.hpp"

namespace defcol {

std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Colorable: return "feasible";
    case Decision::NotColorable: return "infeasible";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct BudgetExhausted {};

class Backtracker {
 public:
  Backtracker(const PlaneGraph& g, const ColorSpec& spec, const SearchBudget& budget)
      : g_(g),
        k_(spec.num_classes()),
        cap_(spec.caps()),
        budget_(budget),
        cls_(g.num_vertices(), -1),
        count_(static_cast<std::size_t>(g.num_vertices()) * k_, 0),
        used_(k_, 0),
        start_(std::chrono::steady_clock::now()) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // Class c may be opened fresh only if no lower class with the same cap is unused.
    same_cap_before_.assign(k_, -1);
    for (int c = 0; c < k_; ++c) {
      for (int p = c - 1; p >= 0; --p) {
        if (cap_[p] == cap_[c]) {
          same_cap_before_[c] = p;
          break;
        }
      }
    }
  }

  SolveResult run() {
    SolveResult result;
    try {
      const bool found = search(0);
      result.decision = found ? Decision::Colorable : Decision::NotColorable;
      if (found) {
        std::vector<int> classes(cls_.size());
        for (std::size_t v = 0; v < cls_.size(); ++v) classes[v] = cls_[v] + 1;
        result.coloring = Coloring(std::move(classes));
      }
    } catch (const BudgetExhausted&) {
      result.decision = Decision::Unknown;
    }
    result.nodes = nodes_;
    result.millis = elapsed_ms();
    return result;
  }

 private:
  int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * k_ + c]; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  void tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    if (budget_.max_time.count() != 0 && (nodes_ & 1023) == 0 &&
        elapsed_ms() > static_cast<double>(budget_.max_time.count())) {
      throw BudgetExhausted{};
    }
  }

  // v (uncoloured) could take class c given the current partial assignment.
  bool admissible(Vertex v, int c) {
    if (count(v, c) > cap_[c]) return false;
    for (Vertex u : g_.neighbors(v)) {
      if (cls_[u] == c && count(u, c) >= cap_[c]) return false;
    }
    return true;
  }

  bool has_option(Vertex v) {
    for (int c = 0; c < k_; ++c) {
      if (admissible(v, c)) return true;
    }
    return false;
  }

  void assign(Vertex v, int c) {
    cls_[v] = c;
    ++used_[c];
    for (Vertex u : g_.neighbors(v)) ++count(u, c);
  }

  void unassign(Vertex v) {
    const int c = cls_[v];
    for (Vertex u : g_.neighbors(v)) --count(u, c);
    --used_[c];
    cls_[v] = -1;
  }

  bool forward_check(Vertex v) {
    const int c = cls_[v];
    for (Vertex u : g_.neighbors(v)) {
      if (cls_[u] < 0) {
        if (!has_option(u)) return false;
      } else if (cls_[u] == c && count(u, c) == cap_[c]) {
        // u just became saturated; its uncoloured neighbours lose class c.
        for (Vertex w : g_.neighbors(u)) {
          if (cls_[w] < 0 && !has_option(w)) return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    tick();
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (int c = 0; c < k_; ++c) {
      if (used_[c] == 0 && same_cap_before_[c] >= 0 && used_[same_cap_before_[c]] == 0) continue;
      if (!admissible(v, c)) continue;
      assign(v, c);
      if (forward_check(v) && search(depth + 1)) return true;
      unassign(v);
    }
    return false;
  }

  const PlaneGraph& g_;
  int k_;
  std::vector<int> cap_;
  SearchBudget budget_;
  std::vector<Vertex> order_;
  std::vector<int> cls_;
  std::vector<int> count_;
  std::vector<int> used_;
  std::vector<int> same_cap_before_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveResult decide_colorable(const PlaneGraph& g, const ColorSpec& spec, const SearchBudget& budget) {
  return Backtracker(g, spec, budget).run();
}

int min_unbalanced_defect(const PlaneGraph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be at least 1");
  for (int d = 0;; ++d) {
    const auto result = decide_colorable(g, ColorSpec::unbalanced(k, d), budget);
    if (result.decision == Decision::Colorable) return d;
    if (result.decision == Decision::Unknown) {
      throw Error(ErrorCode::BudgetExceeded, "undecided at D = " + std::to_string(d));
    }
    if (d >= g.max_degree()) {
      throw Error(ErrorCode::InvariantViolated, "no colouring found at D = max degree");
    }
  }
}

}  // namespace defcol
