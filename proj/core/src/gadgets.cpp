#include "defcol/gadgets.hpp"

#include <algorithm>
#include <sstream>

#include "defcol/error.hpp"

namespace defcol {

namespace {

class Builder {
 public:
  Vertex add() {
    rot_.emplace_back();
    return static_cast<Vertex>(rot_.size()) - 1;
  }

  void append(Vertex v, const std::vector<Vertex>& items) {
    rot_[v].insert(rot_[v].end(), items.begin(), items.end());
  }

  void bridge(Vertex a, Vertex b) {
    rot_[a].push_back(b);
    rot_[b].push_back(a);
  }

  // 2D+1 internally disjoint x,y-paths with `len` edges each. Returns the
  // rotation fragments to splice in at x and at y (a planar fan).
  std::pair<std::vector<Vertex>, std::vector<Vertex>> bundle(Vertex x, Vertex y, int D, int len) {
    std::vector<Vertex> at_x;
    std::vector<Vertex> at_y;
    for (int j = 0; j < 2 * D + 1; ++j) {
      std::vector<Vertex> inner;
      for (int t = 1; t < len; ++t) inner.push_back(add());
      for (std::size_t t = 0; t < inner.size(); ++t) {
        const Vertex prev = t == 0 ? x : inner[t - 1];
        const Vertex next = t + 1 == inner.size() ? y : inner[t + 1];
        rot_[inner[t]] = {next, prev};
      }
      at_x.push_back(inner.front());
      at_y.insert(at_y.begin(), inner.back());
    }
    return {at_x, at_y};
  }

  // Cycle c_0..c_{m-1}; segment i joins c_i and c_{i+1 mod m} and is either
  // a plain edge or a bundle. c_0 is `anchor` when given, which glues the
  // polygon onto an existing vertex.
  std::vector<Vertex> polygon(int m, const std::vector<bool>& is_bundle, int D, int len,
                              Vertex anchor = -1) {
    std::vector<Vertex> c(m);
    for (int i = 0; i < m; ++i) c[i] = (i == 0 && anchor >= 0) ? anchor : add();
    std::vector<std::vector<Vertex>> forward(m);
    std::vector<std::vector<Vertex>> backward(m);
    for (int i = 0; i < m; ++i) {
      const int j = (i + 1) % m;
      if (is_bundle[i]) {
        auto [at_x, at_y] = bundle(c[i], c[j], D, len);
        forward[i] = std::move(at_x);
        backward[j] = std::move(at_y);
      } else {
        forward[i] = {c[j]};
        backward[j] = {c[i]};
      }
    }
    for (int i = 0; i < m; ++i) {
      append(c[i], forward[i]);
      append(c[i], backward[i]);
    }
    return c;
  }

  // K4 with one corner at `anchor`.
  void k4(Vertex anchor) {
    const Vertex p1 = add();
    const Vertex p2 = add();
    const Vertex p3 = add();
    append(anchor, {p1, p2, p3});
    rot_[p1] = {anchor, p3, p2};
    rot_[p2] = {anchor, p1, p3};
    rot_[p3] = {anchor, p2, p1};
  }

  PlaneGraph finish() { return PlaneGraph::from_rotations(std::move(rot_)); }

 private:
  std::vector<PlaneGraph::Rotation> rot_;
};

void require_D(int D) {
  if (D < 0) throw Error(ErrorCode::InvalidParam, "D must be nonnegative, got " + std::to_string(D));
}

void require_h_length(int l) {
  if (l < 1) throw Error(ErrorCode::InvalidParam, "l must be at least 1, got " + std::to_string(l));
}

void require_odd_length(int l) {
  if (l < 3 || l % 2 == 0) {
    throw Error(ErrorCode::InvalidParam, "l must be odd and at least 3, got " + std::to_string(l));
  }
}

// Segment i (1-based index i+1) of an l-cycle is replaced when its parity matches.
std::vector<bool> parity_segments(int l, int parity) {
  std::vector<bool> out(l);
  for (int i = 0; i < l; ++i) out[i] = (i + 1) % 2 == parity;
  return out;
}

std::vector<bool> h1_segments(int l) {
  std::vector<bool> out(l + 1, true);
  out.back() = false;
  return out;
}

SpectrumClaim subset_claim(std::set<int> lengths, std::string expr) {
  return {SpectrumClaim::Kind::Subset, std::move(lengths), "subset of " + std::move(expr)};
}

Gadget finish(Builder& b, GadgetFamily f, int D, std::optional<int> l,
              std::vector<std::pair<std::string, Vertex>> labels) {
  Gadget g{b.finish(), {}};
  auto& d = g.descriptor;
  d.family = f;
  d.D = D;
  d.l = l;
  d.labels = std::move(labels);
  std::tie(d.expected_vertices, d.expected_edges) = expected_size(f, D, l);
  const int L = l.value_or(0);
  switch (f) {
    case GadgetFamily::H2:
      d.spectrum = subset_claim({4}, "{4}");
      break;
    case GadgetFamily::H1:
    case GadgetFamily::H:
      d.spectrum = subset_claim({4, 2 * L + 1}, "{4, 2l+1}");
      break;
    case GadgetFamily::F1:
      d.spectrum = subset_claim({6}, "{6}");
      break;
    case GadgetFamily::Fo:
    case GadgetFamily::F:
      d.spectrum = subset_claim({6, 2 * L + 1}, "{6, 2l+1}");
      break;
    case GadgetFamily::Fe:
    case GadgetFamily::Fprime:
      d.spectrum = subset_claim({6, 2 * L - 1}, "{6, 2l-1}");
      break;
    case GadgetFamily::T0:
    case GadgetFamily::T:
      d.spectrum = {SpectrumClaim::Kind::Equal, {3}, "equal to {3}"};
      break;
    case GadgetFamily::X0:
    case GadgetFamily::X:
      d.spectrum = subset_claim({3, 4}, "{3, 4}");
      break;
  }
  switch (f) {
    case GadgetFamily::H: d.infeasible_spec = ColorSpec::balanced(2, D); break;
    case GadgetFamily::F:
    case GadgetFamily::Fprime:
    case GadgetFamily::T: d.infeasible_spec = ColorSpec::unbalanced(2, D); break;
    case GadgetFamily::X: d.infeasible_spec = ColorSpec::unbalanced(3, D); break;
    default: break;
  }
  return g;
}

std::string describe(const std::set<int>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int x : s) {
    out << (first ? "" : ", ") << x;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string_view to_string(GadgetFamily f) noexcept {
  switch (f) {
    case GadgetFamily::H2: return "H2";
    case GadgetFamily::H1: return "H1";
    case GadgetFamily::H: return "H";
    case GadgetFamily::F1: return "F1";
    case GadgetFamily::Fo: return "Fo";
    case GadgetFamily::Fe: return "Fe";
    case GadgetFamily::F: return "F";
    case GadgetFamily::Fprime: return "Fprime";
    case GadgetFamily::T0: return "T0";
    case GadgetFamily::T: return "T";
    case GadgetFamily::X0: return "X0";
    case GadgetFamily::X: return "X";
  }
  return "?";
}

GadgetFamily parse_family(std::string_view name) {
  static constexpr GadgetFamily all[] = {
      GadgetFamily::H2, GadgetFamily::H1, GadgetFamily::H,      GadgetFamily::F1,
      GadgetFamily::Fo, GadgetFamily::Fe, GadgetFamily::F,      GadgetFamily::Fprime,
      GadgetFamily::T0, GadgetFamily::T,  GadgetFamily::X0,     GadgetFamily::X};
  if (name == "F'") return GadgetFamily::Fprime;
  for (GadgetFamily f : all) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidParam, "unknown gadget family '" + std::string(name) +
                                           "' (expected H2, H1, H, F1, Fo, Fe, F, Fprime, T0, T, X0 or X)");
}

bool uses_length(GadgetFamily f) noexcept {
  switch (f) {
    case GadgetFamily::H1:
    case GadgetFamily::H:
    case GadgetFamily::Fo:
    case GadgetFamily::Fe:
    case GadgetFamily::F:
    case GadgetFamily::Fprime: return true;
    default: return false;
  }
}

bool SpectrumClaim::holds_for(const std::set<int>& spectrum) const {
  if (kind == Kind::Equal) return spectrum == lengths;
  return std::includes(lengths.begin(), lengths.end(), spectrum.begin(), spectrum.end());
}

std::pair<int, int> expected_size(GadgetFamily f, int D, std::optional<int> l) {
  const int paths = 2 * D + 1;
  const int L = l.value_or(0);
  switch (f) {
    case GadgetFamily::H2: return {2 + paths, 2 * paths};
    case GadgetFamily::H1: return {(L + 1) + L * paths, 2 * L * paths + 1};
    case GadgetFamily::H: {
      const auto [v, e] = expected_size(GadgetFamily::H1, D, l);
      return {(D + 1) * (v - 1) + 1, (D + 1) * e};
    }
    case GadgetFamily::F1: return {2 + 2 * paths, 3 * paths};
    case GadgetFamily::Fo:
    case GadgetFamily::Fe: {
      const int bundles = f == GadgetFamily::Fo ? (L + 1) / 2 : (L - 1) / 2;
      const int kept = L - bundles;
      return {L + bundles * 2 * paths, kept + bundles * 3 * paths};
    }
    case GadgetFamily::F: {
      const auto [v, e] = expected_size(GadgetFamily::Fo, D, l);
      return {2 * v, 2 * e + 1};
    }
    case GadgetFamily::Fprime: {
      const auto [v, e] = expected_size(GadgetFamily::Fe, D, l);
      return {(D + 2) * v, (D + 1) + (D + 2) * e};
    }
    case GadgetFamily::T0: return {1 + 2 * (D + 1), 3 * (D + 1)};
    case GadgetFamily::T: {
      const auto [v, e] = expected_size(GadgetFamily::T0, D, l);
      return {2 * v, 2 * e + 1};
    }
    case GadgetFamily::X0: return {1 + 3 * (D + 1), 6 * (D + 1)};
    case GadgetFamily::X: {
      const auto [v, e] = expected_size(GadgetFamily::X0, D, l);
      return {3 * v, 3 * e + 3};
    }
  }
  return {0, 0};
}

Gadget gen_H2(int D) {
  require_D(D);
  Builder b;
  const Vertex x = b.add();
  const Vertex y = b.add();
  auto [at_x, at_y] = b.bundle(x, y, D, 2);
  b.append(x, at_x);
  b.append(y, at_y);
  return finish(b, GadgetFamily::H2, D, std::nullopt, {{"x", x}, {"y", y}});
}

Gadget gen_H1(int D, int l) {
  require_D(D);
  require_h_length(l);
  Builder b;
  const auto c = b.polygon(l + 1, h1_segments(l), D, 2);
  return finish(b, GadgetFamily::H1, D, l, {{"v1", c[0]}});
}

Gadget gen_H(int D, int l) {
  require_D(D);
  require_h_length(l);
  Builder b;
  const Vertex cut = b.add();
  for (int j = 0; j <= D; ++j) b.polygon(l + 1, h1_segments(l), D, 2, cut);
  return finish(b, GadgetFamily::H, D, l, {{"cut", cut}});
}

Gadget gen_F1(int D) {
  require_D(D);
  Builder b;
  const Vertex x = b.add();
  const Vertex y = b.add();
  auto [at_x, at_y] = b.bundle(x, y, D, 3);
  b.append(x, at_x);
  b.append(y, at_y);
  return finish(b, GadgetFamily::F1, D, std::nullopt, {{"x", x}, {"y", y}});
}

Gadget gen_Fo(int D, int l) {
  require_D(D);
  require_odd_length(l);
  Builder b;
  const auto c = b.polygon(l, parity_segments(l, 1), D, 3);
  return finish(b, GadgetFamily::Fo, D, l, {{"v1", c[0]}});
}

Gadget gen_Fe(int D, int l) {
  require_D(D);
  require_odd_length(l);
  Builder b;
  const auto c = b.polygon(l, parity_segments(l, 0), D, 3);
  return finish(b, GadgetFamily::Fe, D, l, {{"v1", c[0]}});
}

Gadget gen_F(int D, int l) {
  require_D(D);
  require_odd_length(l);
  Builder b;
  const Vertex a = b.add();
  const Vertex c = b.add();
  b.polygon(l, parity_segments(l, 1), D, 3, a);
  b.polygon(l, parity_segments(l, 1), D, 3, c);
  b.bridge(a, c);
  return finish(b, GadgetFamily::F, D, l, {{"cut1", a}, {"cut2", c}});
}

Gadget gen_Fprime(int D, int l) {
  require_D(D);
  require_odd_length(l);
  Builder b;
  const Vertex center = b.add();
  std::vector<Vertex> leaves;
  for (int j = 0; j <= D; ++j) leaves.push_back(b.add());
  b.polygon(l, parity_segments(l, 0), D, 3, center);
  for (Vertex leaf : leaves) b.polygon(l, parity_segments(l, 0), D, 3, leaf);
  for (Vertex leaf : leaves) b.bridge(center, leaf);
  std::vector<std::pair<std::string, Vertex>> labels{{"center", center}};
  for (Vertex leaf : leaves) labels.emplace_back("leaf" + std::to_string(labels.size()), leaf);
  return finish(b, GadgetFamily::Fprime, D, l, std::move(labels));
}

Gadget gen_T0(int D) {
  require_D(D);
  Builder b;
  const Vertex x = b.add();
  for (int j = 0; j <= D; ++j) b.polygon(3, {false, false, false}, D, 1, x);
  return finish(b, GadgetFamily::T0, D, std::nullopt, {{"x", x}});
}

Gadget gen_T(int D) {
  require_D(D);
  Builder b;
  const Vertex x1 = b.add();
  const Vertex x2 = b.add();
  for (Vertex x : {x1, x2}) {
    for (int j = 0; j <= D; ++j) b.polygon(3, {false, false, false}, D, 1, x);
  }
  b.bridge(x1, x2);
  return finish(b, GadgetFamily::T, D, std::nullopt, {{"cut1", x1}, {"cut2", x2}});
}

Gadget gen_X0(int D) {
  require_D(D);
  Builder b;
  const Vertex v = b.add();
  for (int j = 0; j <= D; ++j) b.k4(v);
  return finish(b, GadgetFamily::X0, D, std::nullopt, {{"v", v}});
}

Gadget gen_X(int D) {
  require_D(D);
  Builder b;
  const Vertex v[3] = {b.add(), b.add(), b.add()};
  for (Vertex c : v) {
    for (int j = 0; j <= D; ++j) b.k4(c);
  }
  b.append(v[0], {v[1], v[2]});
  b.append(v[1], {v[2], v[0]});
  b.append(v[2], {v[0], v[1]});
  return finish(b, GadgetFamily::X, D, std::nullopt, {{"cut1", v[0]}, {"cut2", v[1]}, {"cut3", v[2]}});
}

Gadget make_gadget(GadgetFamily f, int D, std::optional<int> l) {
  if (uses_length(f) && !l) {
    throw Error(ErrorCode::InvalidParam, std::string(to_string(f)) + " needs the length parameter l");
  }
  switch (f) {
    case GadgetFamily::H2: return gen_H2(D);
    case GadgetFamily::H1: return gen_H1(D, *l);
    case GadgetFamily::H: return gen_H(D, *l);
    case GadgetFamily::F1: return gen_F1(D);
    case GadgetFamily::Fo: return gen_Fo(D, *l);
    case GadgetFamily::Fe: return gen_Fe(D, *l);
    case GadgetFamily::F: return gen_F(D, *l);
    case GadgetFamily::Fprime: return gen_Fprime(D, *l);
    case GadgetFamily::T0: return gen_T0(D);
    case GadgetFamily::T: return gen_T(D);
    case GadgetFamily::X0: return gen_X0(D);
    case GadgetFamily::X: return gen_X(D);
  }
  throw Error(ErrorCode::InvalidParam, "unknown gadget family");
}

std::string_view to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Unverified: return "unverified-budget";
  }
  return "unverified-budget";
}

ClaimStatus VerificationReport::overall() const noexcept {
  ClaimStatus out = ClaimStatus::Pass;
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Fail) return ClaimStatus::Fail;
    if (c.status == ClaimStatus::Unverified) out = ClaimStatus::Unverified;
  }
  return out;
}

const ClaimResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_descriptor(const PlaneGraph& g, const GadgetDescriptor& desc,
                                     const VerifyOptions& options) {
  VerificationReport report;
  const bool euler = is_euler_certified(g);
  report.claims.push_back({"embedding", euler ? ClaimStatus::Pass : ClaimStatus::Fail,
                           euler ? "connected, V - E + F = 2" : "rotation system is not a connected planar embedding"});

  const bool size_ok = g.num_vertices() == desc.expected_vertices && g.num_edges() == desc.expected_edges;
  report.claims.push_back({"size", size_ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                           std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                               " edges; expected " + std::to_string(desc.expected_vertices) + ", " +
                               std::to_string(desc.expected_edges)});

  try {
    const auto spectrum = cycle_spectrum(g, options.cycles);
    const bool ok = desc.spectrum.holds_for(spectrum);
    report.claims.push_back({"spectrum", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                             "found " + describe(spectrum) + ", claimed " + desc.spectrum.expression});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    report.claims.push_back({"spectrum", ClaimStatus::Unverified, "cycle search budget exhausted"});
  }

  if (desc.infeasible_spec) {
    const std::string spec = "(" + desc.infeasible_spec->to_string() + ")";
    if (desc.D > options.max_solved_D) {
      report.claims.push_back({"infeasible", ClaimStatus::Unverified,
                               "not " + spec + "-colourable: skipped (budget), D above " +
                                   std::to_string(options.max_solved_D)});
    } else {
      const auto result = decide_colorable(g, *desc.infeasible_spec, options.solver);
      switch (result.decision) {
        case Decision::NotColorable:
          report.claims.push_back({"infeasible", ClaimStatus::Pass,
                                   "no " + spec + "-colouring exists (" + std::to_string(result.nodes) + " nodes)"});
          break;
        case Decision::Colorable:
          report.claims.push_back({"infeasible", ClaimStatus::Fail, "solver found a " + spec + "-colouring"});
          break;
        case Decision::Unknown:
          report.claims.push_back({"infeasible", ClaimStatus::Unverified, "solver budget exhausted"});
          break;
      }
    }
  }
  return report;
}

}  // namespace defcol
