#include "defcol/cnf.hpp"

#include "defcol/error.hpp"

namespace defcol {

namespace {

// Caps up to this value use the binomial encoding; larger ones a sequential counter.
constexpr int kBinomialLimit = 2;

void for_each_subset(const std::vector<int>& items, int size, std::vector<int>& chosen, std::size_t from,
                     const auto& emit) {
  if (static_cast<int>(chosen.size()) == size) {
    emit(chosen);
    return;
  }
  for (std::size_t i = from; i < items.size(); ++i) {
    chosen.push_back(items[i]);
    for_each_subset(items, size, chosen, i + 1, emit);
    chosen.pop_back();
  }
}

}  // namespace

std::pair<Vertex, int> CnfFormula::decode(int var) const {
  if (var < 1 || var > num_primary_vars) {
    throw Error(ErrorCode::InvalidParam, "variable " + std::to_string(var) + " is not a colour variable");
  }
  return {(var - 1) / num_classes, (var - 1) % num_classes + 1};
}

CnfFormula export_cnf(const PlaneGraph& g, const ColorSpec& spec) {
  CnfFormula f;
  const int k = spec.num_classes();
  f.num_classes = k;
  f.num_primary_vars = g.num_vertices() * k;
  f.num_vars = f.num_primary_vars;
  auto x = [k](Vertex v, int cls) { return v * k + cls; };

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> some;
    for (int i = 1; i <= k; ++i) some.push_back(x(v, i));
    f.clauses.push_back(std::move(some));
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) f.clauses.push_back({-x(v, i), -x(v, j)});
    }
  }

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    const int n = static_cast<int>(nbrs.size());
    for (int i = 1; i <= k; ++i) {
      const int d = spec.cap(i);
      if (d >= n) continue;
      const int guard = -x(v, i);
      std::vector<int> lits;
      for (Vertex u : nbrs) lits.push_back(x(u, i));

      if (d <= kBinomialLimit) {
        std::vector<int> chosen;
        for_each_subset(lits, d + 1, chosen, 0, [&](const std::vector<int>& s) {
          std::vector<int> clause{guard};
          for (int lit : s) clause.push_back(-lit);
          f.clauses.push_back(std::move(clause));
        });
        continue;
      }

      // Sequential counter: s(j, m) holds when at least m of the first j+1 inputs are true.
      const int base = f.num_vars;
      f.num_vars += (n - 1) * d;
      auto s = [base, d](int j, int m) { return base + j * d + m; };
      f.clauses.push_back({-lits[0], s(0, 1)});
      for (int m = 2; m <= d; ++m) f.clauses.push_back({-s(0, m)});
      for (int j = 1; j < n - 1; ++j) {
        f.clauses.push_back({-lits[j], s(j, 1)});
        f.clauses.push_back({-s(j - 1, 1), s(j, 1)});
        for (int m = 2; m <= d; ++m) {
          f.clauses.push_back({-lits[j], -s(j - 1, m - 1), s(j, m)});
          f.clauses.push_back({-s(j - 1, m), s(j, m)});
        }
        f.clauses.push_back({guard, -lits[j], -s(j - 1, d)});
      }
      f.clauses.push_back({guard, -lits[n - 1], -s(n - 2, d)});
    }
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::string out;
  for (int var = 1; var <= f.num_primary_vars; ++var) {
    const auto [v, cls] = f.decode(var);
    out += "c var " + std::to_string(var) + ' ' + std::to_string(v) + ' ' + std::to_string(cls) + '\n';
  }
  out += "p cnf " + std::to_string(f.num_vars) + ' ' + std::to_string(f.clauses.size()) + '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Coloring decode_model(const CnfFormula& f, const std::vector<bool>& model) {
  if (static_cast<int>(model.size()) <= f.num_primary_vars) {
    throw Error(ErrorCode::InvalidParam, "model does not cover every colour variable");
  }
  Coloring c(f.num_classes == 0 ? 0 : f.num_primary_vars / f.num_classes);
  for (int var = 1; var <= f.num_primary_vars; ++var) {
    if (!model[var]) continue;
    const auto [v, cls] = f.decode(var);
    if (c.is_colored(v)) throw Error(ErrorCode::InvariantViolated, "model puts a vertex in two classes");
    c.assign(v, cls);
  }
  return c;
}

}  // namespace defcol
