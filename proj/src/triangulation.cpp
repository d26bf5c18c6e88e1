#include "cvol/triangulation.hpp"

#include <algorithm>
#include <map>

#include "cvol/dilog.hpp"
#include "cvol/union_find.hpp"

namespace cvol {

namespace {

constexpr std::string_view kLetters = "EFABCD";

int letter_index(char c) { return static_cast<int>(kLetters.find(c)); }

int tag_of(char c) {
  switch (c) {
    case 'E': return 0;
    case 'F': return 1;
    case 'A':
    case 'C': return 2;
    default: return 3;
  }
}

// Half-turn of the octahedron about its axis.
char rho(char c) {
  switch (c) {
    case 'A': return 'C';
    case 'C': return 'A';
    case 'B': return 'D';
    case 'D': return 'B';
    default: return c;
  }
}

constexpr std::array<std::pair<int, int>, 6> kSlotPositions = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct FaceSpec {
  std::string_view near;  // three letters at the crossing where the side is under (or the first end)
  std::string_view far;
};

// Gluings across a side, in vertex-correspondence order. Letters are written
// for the canonical slots b (under) and c (over); slots a and d use rho.
constexpr std::array<FaceSpec, 2> kMixed = {{{"ABE", "CDF"}, {"CBE", "CBF"}}};
constexpr std::array<FaceSpec, 2> kOverOver = {{{"BCF", "DCF"}, {"DCF", "BCF"}}};
constexpr std::array<FaceSpec, 2> kUnderUnder = {{{"ABE", "CBE"}, {"CBE", "ABE"}}};

int edge_key(int crossing, char p, char q) {
  int i = letter_index(p);
  int j = letter_index(q);
  if (i > j) std::swap(i, j);
  return crossing * 36 + 6 * i + j;
}

int vertex_key(int crossing, char p) { return crossing * 6 + letter_index(p); }

// Tetrahedron of `crossing` containing the equator letters of `face`, and the
// position of each face letter in it.
std::pair<FaceRef, std::array<int, 3>> locate_face(const std::vector<Tetrahedron>& tets, int crossing,
                                                   const std::array<char, 3>& face) {
  for (int c = 0; c < 4; ++c) {
    const Tetrahedron& t = tets[static_cast<size_t>(4 * crossing + c)];
    std::array<int, 3> pos{};
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      auto it = std::find(t.vertices.begin(), t.vertices.end(), face[i]);
      ok = it != t.vertices.end();
      if (ok) pos[i] = static_cast<int>(it - t.vertices.begin());
    }
    if (!ok) continue;
    int omitted = 0 + 1 + 2 + 3 - pos[0] - pos[1] - pos[2];
    return {FaceRef{4 * crossing + c, omitted}, pos};
  }
  throw TriangulationError("face " + std::string(face.begin(), face.end()) + " not found at crossing " +
                           std::to_string(crossing));
}

}  // namespace

ShapeRole shape_role(EdgeSlot slot) {
  switch (slot) {
    case EdgeSlot::EF:
    case EdgeSlot::XY: return ShapeRole::U;
    case EdgeSlot::EX:
    case EdgeSlot::FY: return ShapeRole::UDoublePrime;
    default: return ShapeRole::UPrime;
  }
}

std::string to_string(Corner c) {
  static const std::array<std::string, 4> names = {"AB", "BC", "CD", "DA"};
  return names[static_cast<size_t>(c)];
}

std::string to_string(EdgeSlot s) {
  static const std::array<std::string, 6> names = {"EF", "EX", "EY", "FX", "FY", "XY"};
  return names[static_cast<size_t>(s)];
}

Triangulation build_triangulation(const LinkDiagram& d) {
  Triangulation tri;
  tri.n_sides_ = d.n_sides();
  const int c = d.n_crossings();

  constexpr std::array<std::pair<char, char>, 4> kEquator = {{{'A', 'B'}, {'B', 'C'}, {'C', 'D'}, {'D', 'A'}}};
  for (const Crossing& cr : d.crossings()) {
    const auto& [a, b, cc, dd] = cr.quad;
    const std::array<std::pair<SideId, SideId>, 4> shapes = {{{b, a}, {cc, b}, {dd, cc}, {a, dd}}};
    for (int i = 0; i < 4; ++i) {
      Tetrahedron t;
      t.crossing = cr.id;
      t.corner = static_cast<Corner>(i);
      t.sigma = (i % 2 == 0) ? 1 : -1;
      t.num = shapes[i].first;
      t.den = shapes[i].second;
      t.vertices = {'E', 'F', kEquator[i].first, kEquator[i].second};
      for (int v = 0; v < 4; ++v) t.tags[v] = tag_of(t.vertices[v]);
      tri.tets_.push_back(t);
    }
  }

  auto add_pairing = [&](int k1, const std::array<char, 3>& f1, int k2, const std::array<char, 3>& f2) {
    const auto [ref1, pos1] = locate_face(tri.tets_, k1, f1);
    const auto [ref2, pos2] = locate_face(tri.tets_, k2, f2);
    tri.pairings_.push_back({ref1, ref2, pos1, pos2});
  };

  // Internal faces E F Y(i) = E F X(i+1) inside each octahedron.
  for (int k = 0; k < c; ++k) {
    for (int i = 0; i < 4; ++i) {
      tri.pairings_.push_back({FaceRef{4 * k + i, 2}, FaceRef{4 * k + (i + 1) % 4, 3}, {0, 1, 3}, {0, 1, 2}});
    }
  }

  // Two gluings across every side.
  for (int s = 1; s <= d.n_sides(); ++s) {
    auto occ = d.occurrences(SideId{s});
    const bool under0 = occ[0].second % 2 == 1;
    const bool under1 = occ[1].second % 2 == 1;
    const std::array<FaceSpec, 2>* pattern = &kMixed;
    if (under0 == under1) {
      pattern = under0 ? &kUnderUnder : &kOverOver;
    } else if (under1) {
      std::swap(occ[0], occ[1]);
    }
    auto map = [](std::string_view letters, int pos) {
      std::array<char, 3> out{};
      for (int i = 0; i < 3; ++i) out[i] = (pos == 0 || pos == 3) ? rho(letters[i]) : letters[i];
      return out;
    };
    for (const FaceSpec& f : *pattern) {
      add_pairing(occ[0].first, map(f.near, occ[0].second), occ[1].first, map(f.far, occ[1].second));
    }
  }

  // Every face exactly once; the internal pairings list each face once from each side.
  std::map<std::pair<int, int>, int> uses;
  for (const FacePairing& p : tri.pairings_) {
    ++uses[{p.a.tet, p.a.omitted}];
    ++uses[{p.b.tet, p.b.omitted}];
  }
  for (int t = 0; t < 4 * c; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto it = uses.find({t, f});
      if (it == uses.end() || it->second != 1) {
        throw TriangulationError("face " + std::to_string(f) + " of tetrahedron " + std::to_string(t) +
                                 (it == uses.end() ? " is unglued" : " is glued more than once"));
      }
    }
  }

  UnionFind edges(36 * c);
  UnionFind verts(6 * c);
  for (int k = 0; k < c; ++k) {
    edges.unite(edge_key(k, 'B', 'F'), edge_key(k, 'D', 'F'));
    edges.unite(edge_key(k, 'A', 'E'), edge_key(k, 'C', 'E'));
    verts.unite(vertex_key(k, 'B'), vertex_key(k, 'D'));
    verts.unite(vertex_key(k, 'A'), vertex_key(k, 'C'));
  }
  for (const FacePairing& p : tri.pairings_) {
    const Tetrahedron& ta = tri.tets_[static_cast<size_t>(p.a.tet)];
    const Tetrahedron& tb = tri.tets_[static_cast<size_t>(p.b.tet)];
    for (int i = 0; i < 3; ++i) {
      const char va = ta.vertices[p.a_vertices[i]];
      const char vb = tb.vertices[p.b_vertices[i]];
      verts.unite(vertex_key(ta.crossing, va), vertex_key(tb.crossing, vb));
      for (int j = i + 1; j < 3; ++j) {
        const char wa = ta.vertices[p.a_vertices[j]];
        const char wb = tb.vertices[p.b_vertices[j]];
        if ((tag_of(va) < tag_of(wa)) != (tag_of(vb) < tag_of(wb))) {
          throw TriangulationError("edge orientation mismatch gluing tetrahedra " + std::to_string(p.a.tet) +
                                   " and " + std::to_string(p.b.tet));
        }
        edges.unite(edge_key(ta.crossing, va, wa), edge_key(tb.crossing, vb, wb));
      }
    }
  }

  std::map<int, size_t> class_of_root;
  std::vector<std::array<bool, 3>> flags;  // horizontal, axis, twisted
  for (int t = 0; t < 4 * c; ++t) {
    const Tetrahedron& tet = tri.tets_[static_cast<size_t>(t)];
    for (size_t s = 0; s < kEdgeSlots.size(); ++s) {
      const auto [i, j] = kSlotPositions[s];
      const char p = tet.vertices[i];
      const char q = tet.vertices[j];
      const int root = edges.find(edge_key(tet.crossing, p, q));
      auto [it, inserted] = class_of_root.try_emplace(root, tri.edges_.size());
      if (inserted) {
        tri.edges_.emplace_back();
        flags.push_back({false, false, false});
      }
      tri.edges_[it->second].members.push_back({t, kEdgeSlots[s]});
      std::string key{std::min(p, q), std::max(p, q)};
      auto& f = flags[it->second];
      f[0] = f[0] || kEdgeSlots[s] == EdgeSlot::XY;
      f[1] = f[1] || kEdgeSlots[s] == EdgeSlot::EF;
      f[2] = f[2] || key == "BF" || key == "DF" || key == "AE" || key == "CE";
    }
  }
  for (size_t e = 0; e < tri.edges_.size(); ++e) {
    tri.edges_[e].label = flags[e][0] ? 'A' : flags[e][1] ? 'C' : flags[e][2] ? 'B' : 'D';
  }

  std::map<int, size_t> vclass_of_root;
  for (int k = 0; k < c; ++k) {
    for (char letter : kLetters) {
      const int root = verts.find(vertex_key(k, letter));
      auto [it, inserted] = vclass_of_root.try_emplace(root, tri.vertices_.size());
      if (inserted) tri.vertices_.emplace_back();
      tri.vertices_[it->second].members.emplace_back(k, letter);
    }
  }
  int cusp = 0;
  for (VertexClass& v : tri.vertices_) {
    auto has = [&](std::string_view set) {
      return std::any_of(v.members.begin(), v.members.end(),
                         [&](const auto& m) { return set.find(m.second) != std::string_view::npos; });
    };
    v.name = has("AC") ? "-inf" : has("BD") ? "+inf" : "P" + std::to_string(++cusp);
  }
  return tri;
}

std::complex<double> shape_of_edge_slot(const Tetrahedron& tet, EdgeSlot slot, const ComplexVector& z) {
  const std::complex<double> u = z(tet.num.slot()) / z(tet.den.slot());
  if (u == 0.0 || u == 1.0 || !std::isfinite(std::abs(u))) {
    throw NumericalError("degenerate shape at tetrahedron " + to_string(tet.corner) + " of crossing " +
                         std::to_string(tet.crossing));
  }
  switch (shape_role(slot)) {
    case ShapeRole::U: return u;
    case ShapeRole::UPrime: return 1.0 / (1.0 - u);
    default: return 1.0 - 1.0 / u;
  }
}

std::vector<EdgeResidual> gluing_residuals(const Triangulation& tri, const ComplexVector& z) {
  std::vector<EdgeResidual> out;
  out.reserve(tri.edge_classes().size());
  for (const EdgeClass& e : tri.edge_classes()) {
    EdgeResidual r;
    r.label = e.label;
    r.product = 1.0;
    r.log_sum = 0.0;
    for (const EdgeMember& m : e.members) {
      const std::complex<double> s = shape_of_edge_slot(tri.tetrahedra()[static_cast<size_t>(m.tet)], m.slot, z);
      r.product *= s;
      r.log_sum += log_p(s);
    }
    r.residual = std::abs(r.product - 1.0);
    out.push_back(r);
  }
  return out;
}

double bw_volume(const Triangulation& tri, const ComplexVector& z) {
  double sum = 0.0;
  for (const Tetrahedron& t : tri.tetrahedra()) {
    const std::complex<double> u = z(t.num.slot()) / z(t.den.slot());
    sum += t.sigma * bloch_wigner(t.sigma > 0 ? u : 1.0 / u);
  }
  return sum;
}

void cross_check(const Triangulation& tri, const ComplexVector& z, VolumeReport& report) {
  report.bw_volume = bw_volume(tri, z);
  double worst = 0.0;
  for (const EdgeResidual& r : gluing_residuals(tri, z)) worst = std::max(worst, r.residual);
  report.max_gluing_residual = worst;
}

}  // namespace cvol
