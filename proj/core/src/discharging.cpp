#include "defcol/discharging.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "defcol/cycles.hpp"
#include "defcol/error.hpp"

namespace defcol {

namespace {

constexpr int kBal2High = 7;
constexpr int kUnbal2High = 47;
constexpr int kUnbal3High = 120;

bool mid2(int d) { return d >= 3 && d < kUnbal2High; }

void require_certified(const PlaneGraph& g) {
  if (!g.has_embedding()) throw Error(ErrorCode::NoEmbedding, "discharging needs a rotation system");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "discharging needs a connected graph");
  if (!is_euler_certified(g)) throw Error(ErrorCode::NotPlanar, "rotation system fails V - E + F = 2");
}

void require_cycle_free(const PlaneGraph& g, Section s) {
  for (int k : forbidden_cycles(s)) {
    if (has_cycle_of_length(g, k)) {
      throw Error(ErrorCode::CycleRestrictionViolated,
                  std::string(to_string(s)) + " rules need a graph without " + std::to_string(k) + "-cycles");
    }
  }
}

// Faces incident with v, each once, in order of first appearance around v.
std::vector<int> distinct_faces_at(const FaceSet& fs, Vertex v) {
  std::vector<int> out;
  for (int f : fs.faces_around(v)) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

std::vector<Vertex> distinct_vertices(const FaceWalk& f) {
  std::vector<Vertex> out(f.walk.begin(), f.walk.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using DegreePredicate = std::function<bool(int)>;

// Five distinct vertices whose degrees match `pattern` cyclically in either direction.
bool matches_cyclic(const PlaneGraph& g, const FaceWalk& f, const std::array<DegreePredicate, 5>& pattern) {
  if (f.degree() != 5 || distinct_vertices(f).size() != 5) return false;
  for (int dir : {1, -1}) {
    for (int start = 0; start < 5; ++start) {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i) {
        const int idx = ((start + dir * i) % 5 + 5) % 5;
        ok = pattern[i](g.degree(f.walk[idx]));
      }
      if (ok) return true;
    }
  }
  return false;
}

FaceTag tag_face(const PlaneGraph& g, const FaceWalk& f, Section s) {
  switch (s) {
    case Section::Bal2:
      if (f.degree() == 3 &&
          std::any_of(f.walk.begin(), f.walk.end(), [&](Vertex v) { return g.degree(v) == 2; })) {
        return FaceTag::Terrible3;
      }
      return FaceTag::Plain;
    case Section::Unbal2: {
      const DegreePredicate big = [](int d) { return d >= kUnbal2High; };
      const DegreePredicate two = [](int d) { return d == 2; };
      const DegreePredicate mid = [](int d) { return mid2(d); };
      if (matches_cyclic(g, f, {big, two, two, big, two})) return FaceTag::Bad5PatternA;
      if (matches_cyclic(g, f, {two, big, two, mid, mid})) return FaceTag::Bad5PatternB;
      return FaceTag::Plain;
    }
    case Section::Unbal3: {
      const auto vs = distinct_vertices(f);
      int high = 0;
      bool rest_three = true;
      for (Vertex v : vs) {
        if (g.degree(v) >= kUnbal3High) {
          ++high;
        } else if (g.degree(v) != 3) {
          rest_three = false;
        }
      }
      return high == 1 && rest_three ? FaceTag::Annoying : FaceTag::Plain;
    }
  }
  return FaceTag::Plain;
}

bool is_bad(FaceTag t) { return t == FaceTag::Bad5PatternA || t == FaceTag::Bad5PatternB; }

class Engine {
 public:
  Engine(const PlaneGraph& g, Section s) : g_(g), fs_(FaceSet::trace(g)) {
    ledger_.section = s;
    ledger_.faces = fs_.faces();
    const ChargeSpec spec = charge_spec(s);
    for (Vertex v = 0; v < g.num_vertices(); ++v) ledger_.vertex_initial.push_back(spec.vertex_charge(g.degree(v)));
    for (const auto& f : fs_.faces()) ledger_.face_initial.push_back(spec.face_charge(f.degree()));
    for (const auto& f : fs_.faces()) tags_.push_back(tag_face(g, f, s));
  }

  ChargeLedger run(bool with_rules) {
    if (with_rules) {
      switch (ledger_.section) {
        case Section::Bal2: bal2(); break;
        case Section::Unbal2: unbal2(); break;
        case Section::Unbal3: unbal3(); break;
      }
    }
    ledger_.vertex_final = ledger_.vertex_initial;
    ledger_.face_final = ledger_.face_initial;
    for (const auto& t : ledger_.transfers) {
      slot(t.source) -= t.amount;
      slot(t.target) += t.amount;
    }
    return std::move(ledger_);
  }

 private:
  Charge& slot(Element e) {
    return e.kind == Element::Kind::Vertex ? ledger_.vertex_final[e.id] : ledger_.face_final[e.id];
  }

  void send(Element from, Element to, Charge amount, const char* rule) {
    if (amount != Charge(0)) ledger_.transfers.push_back({from, to, amount, rule});
  }

  int deg(Vertex v) const { return g_.degree(v); }
  const FaceWalk& face(int f) const { return fs_[f]; }

  void bal2() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const auto V = Element::vertex(v);
      if (deg(v) >= kBal2High) {
        for (Vertex u : g_.neighbors(v)) {
          if (deg(u) == 2) send(V, Element::vertex(u), 1, "R1");
        }
      }
      for (int f : distinct_faces_at(fs_, v)) {
        const auto F = Element::face(f);
        if (face(f).degree() == 3) {
          if (deg(v) >= 4 && deg(v) <= 6) send(V, F, 1, "R2");
          if (deg(v) >= kBal2High) {
            if (tags_[f] == FaceTag::Terrible3) {
              send(V, F, Charge(3, 2), "R3A");
            } else {
              send(V, F, 1, "R3B");
            }
          }
        } else if (face(f).degree() == 5 && deg(v) >= kBal2High) {
          const auto& w = face(f).walk;
          const bool high_neighbour_on_face = std::any_of(w.begin(), w.end(), [&](Vertex u) {
            return u != v && deg(u) >= kBal2High && g_.has_edge(u, v);
          });
          if (high_neighbour_on_face) send(V, F, Charge(1, 2), "R3C");
        }
      }
    }
  }

  // Triples (pred, v, succ) at each occurrence of v on the walk of f.
  template <class Pred>
  int count_triples(int f, Vertex v, Pred pred) const {
    const auto& w = face(f).walk;
    const int n = static_cast<int>(w.size());
    int t = 0;
    for (int i = 0; i < n; ++i) {
      if (w[i] != v) continue;
      if (pred(w[(i + n - 1) % n], w[(i + 1) % n])) ++t;
    }
    return t;
  }

  void unbal2() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const auto V = Element::vertex(v);
      if (deg(v) >= kUnbal2High) {
        for (Vertex u : g_.neighbors(v)) send(V, Element::vertex(u), 1, "R1A");
        for (int f : distinct_faces_at(fs_, v)) {
          if (is_bad(tags_[f])) {
            send(V, Element::face(f), 1, "R1B");
          } else {
            send(V, Element::face(f), Charge(3, 4) * k_incidence(face(f), v), "R1C");
          }
        }
      } else if (mid2(deg(v))) {
        for (Vertex u : g_.neighbors(v)) {
          if (deg(u) == 2) send(V, Element::vertex(u), Charge(1, 2), "R2A");
        }
        for (int f : distinct_faces_at(fs_, v)) {
          const int same = count_triples(f, v, [&](Vertex x, Vertex y) {
            return (deg(x) >= kUnbal2High && deg(y) >= kUnbal2High) || (mid2(deg(x)) && mid2(deg(y)));
          });
          send(V, Element::face(f), Charge(same, 2), "R2B");
          const int mixed = count_triples(f, v, [&](Vertex x, Vertex y) {
            return (deg(x) == 2 && mid2(deg(y))) || (deg(y) == 2 && mid2(deg(x)));
          });
          send(V, Element::face(f), Charge(mixed, 4), "R2C");
        }
      }
    }
    for (int f = 0; f < fs_.size(); ++f) {
      for (Vertex v : distinct_vertices(face(f))) {
        if (deg(v) != 2) continue;
        const auto nbrs = g_.neighbors(v);
        const int k = k_incidence(face(f), v);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return deg(u) == 2; })) {
          send(Element::face(f), Element::vertex(v), Charge(k, 2), "R3A");
        }
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return mid2(deg(u)); })) {
          send(Element::face(f), Element::vertex(v), Charge(k, 4), "R3B");
        }
      }
    }
  }

  void unbal3() {
    std::vector<bool> on_triangle(g_.num_vertices(), false);
    for (const auto& f : fs_.faces()) {
      if (f.degree() == 3) {
        for (Vertex v : f.walk) on_triangle[v] = true;
      }
    }
    for (int f = 0; f < fs_.size(); ++f) {
      if (face(f).degree() < 5) continue;
      const auto vs = distinct_vertices(face(f));
      int r = 0;
      for (Vertex u : vs) {
        if (deg(u) == 3) r += k_incidence(face(f), u);
      }
      if (r == 0) continue;
      for (Vertex u : vs) {
        if (deg(u) != 3) continue;
        send(Element::face(f), Element::vertex(u),
             Charge(k_incidence(face(f), u), r) * (face(f).degree() - 4), "R1");
      }
    }
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      const auto V = Element::vertex(v);
      if (deg(v) >= kUnbal3High) {
        for (Vertex u : g_.neighbors(v)) send(V, Element::vertex(u), Charge(2, 3), "R2A");
      }
      for (int f : distinct_faces_at(fs_, v)) {
        if (face(f).degree() != 3) continue;
        if (deg(v) >= kUnbal3High) send(V, Element::face(f), Charge(3, 5), "R2B");
        if (deg(v) >= 4 && deg(v) < kUnbal3High) send(V, Element::face(f), Charge(1, 3), "R3");
      }
      if (deg(v) == 3 && !on_triangle[v]) {
        for (Vertex u : g_.neighbors(v)) {
          if (deg(u) == 3) send(V, Element::vertex(u), Charge(1, 15), "R4");
        }
      }
    }
  }

  const PlaneGraph& g_;
  FaceSet fs_;
  std::vector<FaceTag> tags_;
  ChargeLedger ledger_;
};

Charge sum(const std::vector<Charge>& xs) {
  Charge out(0);
  for (const auto& x : xs) out += x;
  return out;
}

}  // namespace

std::string_view to_string(Section s) noexcept {
  switch (s) {
    case Section::Bal2: return "bal2";
    case Section::Unbal2: return "unbal2";
    case Section::Unbal3: return "unbal3";
  }
  return "?";
}

Section parse_section(std::string_view name) {
  for (Section s : {Section::Bal2, Section::Unbal2, Section::Unbal3}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidParam, "unknown section '" + std::string(name) + "' (expected bal2, unbal2 or unbal3)");
}

std::string to_string(const Charge& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Charge ChargeSpec::expected_total() const { return section == Section::Unbal3 ? Charge(-8) : Charge(-12); }

ChargeSpec charge_spec(Section s) noexcept {
  if (s == Section::Unbal3) return {s, 1, -4, 1, -4};
  return {s, 2, -6, 1, -6};
}

std::vector<int> forbidden_cycles(Section s) {
  if (s == Section::Unbal2) return {3, 4, 6};
  return {4};
}

std::string Element::to_string() const { return (kind == Kind::Vertex ? "v" : "f") + std::to_string(id); }

Charge ChargeLedger::initial(Element e) const {
  return e.kind == Element::Kind::Vertex ? vertex_initial.at(e.id) : face_initial.at(e.id);
}

Charge ChargeLedger::final_charge(Element e) const {
  return e.kind == Element::Kind::Vertex ? vertex_final.at(e.id) : face_final.at(e.id);
}

Charge ChargeLedger::total_initial() const { return sum(vertex_initial) + sum(face_initial); }
Charge ChargeLedger::total_final() const { return sum(vertex_final) + sum(face_final); }

Charge ChargeLedger::net(Element e) const {
  Charge out(0);
  for (const auto& t : transfers) {
    if (t.target == e) out += t.amount;
    if (t.source == e) out -= t.amount;
  }
  return out;
}

ChargeLedger initial_charges(const PlaneGraph& g, Section s) {
  require_certified(g);
  return Engine(g, s).run(false);
}

std::string_view to_string(FaceTag t) noexcept {
  switch (t) {
    case FaceTag::Plain: return "plain";
    case FaceTag::Terrible3: return "terrible3";
    case FaceTag::Bad5PatternA: return "bad5-patternA";
    case FaceTag::Bad5PatternB: return "bad5-patternB";
    case FaceTag::Annoying: return "annoying";
  }
  return "?";
}

std::vector<FaceClass> classify_faces(const PlaneGraph& g, Section s) {
  const auto faces = FaceSet::trace(g);
  std::vector<FaceClass> out;
  for (const auto& f : faces.faces()) out.push_back({f.id, tag_face(g, f, s)});
  return out;
}

ChargeLedger apply_rules(const PlaneGraph& g, Section s) {
  require_certified(g);
  require_cycle_free(g, s);
  return Engine(g, s).run(true);
}

std::vector<ChargeGroup> grouped_final_charges_unbal3(const ChargeLedger& ledger, const PlaneGraph& g) {
  std::vector<int> owner(g.num_vertices(), -1);
  std::vector<ChargeGroup> groups;
  for (const auto& f : ledger.faces) {
    if (f.degree() != 3) continue;
    ChargeGroup group;
    group.members.push_back(Element::face(f.id));
    for (Vertex v : distinct_vertices(f)) {
      if (g.degree(v) != 3) continue;
      if (owner[v] >= 0) {
        throw Error(ErrorCode::GroupingConflict, "3-vertex " + std::to_string(v) + " lies on faces " +
                                                     std::to_string(owner[v]) + " and " + std::to_string(f.id));
      }
      owner[v] = f.id;
      group.members.push_back(Element::vertex(v));
    }
    groups.push_back(std::move(group));
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (owner[v] < 0) groups.push_back({{Element::vertex(v)}, {}});
  }
  for (const auto& f : ledger.faces) {
    if (f.degree() != 3) groups.push_back({{Element::face(f.id)}, {}});
  }
  for (auto& group : groups) {
    group.total = 0;
    for (const auto& e : group.members) group.total += ledger.final_charge(e);
  }
  return groups;
}

std::string_view to_string(ConfigKind k) noexcept {
  switch (k) {
    case ConfigKind::Bal2LowVertex: return "1-vertex";
    case ConfigKind::Bal2LowLowEdge: return "edge-both-6-";
    case ConfigKind::Bal2ThreeVertex: return "3-vertex";
    case ConfigKind::Bal2TerribleOverload: return "7+-vertex-too-many-terrible-faces";
    case ConfigKind::Unbal2LowVertex: return "1-vertex";
    case ConfigKind::Unbal2NoHighNeighbor: return "46--vertex-without-47+-neighbor";
    case ConfigKind::Unbal2TwoBadFaces: return "2-vertex-on-two-bad-faces";
    case ConfigKind::Unbal2BadOverload: return "47+-vertex-too-many-bad-faces";
    case ConfigKind::Unbal3LowVertex: return "2--vertex";
    case ConfigKind::Unbal3NoHighNeighbor: return "119--vertex-without-120+-neighbor";
    case ConfigKind::Unbal3AnnoyingCluster: return "annoying-5-face-cluster";
  }
  return "?";
}

std::vector<ReducibleConfig> find_reducible(const PlaneGraph& g, Section s) {
  std::vector<ReducibleConfig> out;
  auto add = [&](ConfigKind kind, std::vector<Vertex> vs, std::vector<int> fs = {}) {
    out.push_back({s, kind, std::move(vs), std::move(fs)});
  };
  auto has_neighbor = [&](Vertex v, int min_degree) {
    const auto nbrs = g.neighbors(v);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return g.degree(u) >= min_degree; });
  };
  std::optional<FaceSet> fs;
  std::vector<FaceTag> tags;
  if (g.has_embedding()) {
    fs = FaceSet::trace_all(g);
    for (const auto& f : fs->faces()) tags.push_back(tag_face(g, f, s));
  }

  switch (s) {
    case Section::Bal2:
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) <= 1) add(ConfigKind::Bal2LowVertex, {v});
      }
      for (const auto& [u, v] : g.edges()) {
        if (g.degree(u) <= 6 && g.degree(v) <= 6) add(ConfigKind::Bal2LowLowEdge, {u, v});
      }
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 3) add(ConfigKind::Bal2ThreeVertex, {v});
      }
      if (fs) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          const int d = g.degree(v);
          if (d < kBal2High) continue;
          std::vector<int> terrible;
          for (int f : distinct_faces_at(*fs, v)) {
            if (tags[f] == FaceTag::Terrible3) terrible.push_back(f);
          }
          if (static_cast<int>(terrible.size()) > std::min(d / 2, d - 6)) {
            add(ConfigKind::Bal2TerribleOverload, {v}, terrible);
          }
        }
      }
      break;
    case Section::Unbal2:
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) <= 1) add(ConfigKind::Unbal2LowVertex, {v});
      }
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < kUnbal2High && !has_neighbor(v, kUnbal2High)) add(ConfigKind::Unbal2NoHighNeighbor, {v});
      }
      if (fs) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          std::vector<int> bad;
          for (int f : distinct_faces_at(*fs, v)) {
            if (is_bad(tags[f])) bad.push_back(f);
          }
          if (g.degree(v) == 2 && bad.size() >= 2) add(ConfigKind::Unbal2TwoBadFaces, {v}, bad);
          if (g.degree(v) >= kUnbal2High && static_cast<int>(bad.size()) > g.degree(v) / 2) {
            add(ConfigKind::Unbal2BadOverload, {v}, bad);
          }
        }
      }
      break;
    case Section::Unbal3:
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) <= 2) add(ConfigKind::Unbal3LowVertex, {v});
      }
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < kUnbal3High && !has_neighbor(v, kUnbal3High)) add(ConfigKind::Unbal3NoHighNeighbor, {v});
      }
      if (fs) {
        for (int f = 0; f < fs->size(); ++f) {
          const auto& walk = (*fs)[f].walk;
          if (walk.size() != 5 || tags[f] != FaceTag::Annoying) continue;
          std::set<int> adjacent;
          for (std::size_t i = 0; i < walk.size(); ++i) {
            const int other = fs->face_of(walk[(i + 1) % walk.size()], walk[i]);
            if (other != f) adjacent.insert(other);
          }
          bool only_annoying = true;
          std::vector<int> triangles;
          for (int h : adjacent) {
            const int d = (*fs)[h].degree();
            if (tags[h] != FaceTag::Annoying || (d != 3 && d != 5)) only_annoying = false;
            if (tags[h] == FaceTag::Annoying && d == 3) triangles.push_back(h);
          }
          if (only_annoying && triangles.size() >= 3) {
            triangles.insert(triangles.begin(), f);
            add(ConfigKind::Unbal3AnnoyingCluster, {}, triangles);
          }
        }
      }
      break;
  }
  return out;
}

AuditReport audit(const PlaneGraph& g, Section s) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::InvalidParam, "audit needs at least two vertices");
  AuditReport r;
  r.section = s;
  r.ledger = apply_rules(g, s);
  r.initial_total = r.ledger.total_initial();
  r.total_matches = r.initial_total == charge_spec(s).expected_total();
  r.conserved = r.ledger.total_final() == r.initial_total;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (r.ledger.vertex_final[v] < Charge(0)) r.negative.push_back(Element::vertex(v));
  }
  for (int f = 0; f < static_cast<int>(r.ledger.faces.size()); ++f) {
    if (r.ledger.face_final[f] < Charge(0)) r.negative.push_back(Element::face(f));
  }
  if (s == Section::Unbal3) r.groups = grouped_final_charges_unbal3(r.ledger, g);
  r.configs = find_reducible(g, s);
  r.meta_claim_holds = !r.configs.empty();
  return r;
}

}  // namespace defcol
