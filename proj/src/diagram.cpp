#include "cvol/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "cvol/union_find.hpp"

namespace cvol {

namespace {

Quad rotate_half(const Quad& q) { return {q[2], q[3], q[0], q[1]}; }

Quad rotate_step(const Quad& q) { return {q[1], q[2], q[3], q[0]}; }

std::string quad_text(const Quad& q) {
  std::ostringstream os;
  os << '[' << q[0].index << ',' << q[1].index << ',' << q[2].index << ',' << q[3].index << ']';
  return os.str();
}

}  // namespace

Quad canonical_quad(const Quad& q) { return std::min(q, rotate_half(q)); }

LinkDiagram LinkDiagram::from_quads(const std::vector<std::array<int, 4>>& quads) {
  std::vector<Quad> typed;
  typed.reserve(quads.size());
  for (const auto& q : quads) typed.push_back({SideId{q[0]}, SideId{q[1]}, SideId{q[2]}, SideId{q[3]}});
  return from_quads(typed);
}

LinkDiagram LinkDiagram::from_quads(const std::vector<Quad>& quads) {
  using Kind = DiagramError::Kind;
  if (quads.empty()) throw DiagramError(Kind::Malformed, "diagram has no crossings");

  const int n_sides = 2 * static_cast<int>(quads.size());
  std::vector<int> multiplicity(static_cast<size_t>(n_sides) + 1, 0);
  for (const Quad& q : quads) {
    for (SideId s : q) {
      if (s.index < 1 || s.index > n_sides) {
        throw DiagramError(Kind::Malformed, "side label " + std::to_string(s.index) +
                                                " outside 1.." + std::to_string(n_sides) + " in crossing " +
                                                quad_text(q));
      }
      ++multiplicity[s.index];
    }
  }
  for (int s = 1; s <= n_sides; ++s) {
    if (multiplicity[s] != 2) {
      throw DiagramError(Kind::Multiplicity, "side " + std::to_string(s) + " appears " +
                                                 std::to_string(multiplicity[s]) + " times (expected 2)");
    }
  }

  for (const Quad& q : quads) {
    for (int i = 0; i < 4; ++i) {
      if (q[i] == q[(i + 1) % 4]) {
        throw DiagramError(Kind::Kink, "kink at crossing " + quad_text(q) + ": side " +
                                           std::to_string(q[i].index) +
                                           " joins adjacent positions; remove the kink by hand and renumber");
      }
    }
    if (q[0] == q[2] || q[1] == q[3]) {
      throw DiagramError(Kind::Malformed, "crossing " + quad_text(q) + " joins a strand to itself");
    }
  }

  LinkDiagram d;
  d.crossings_.reserve(quads.size());
  d.occurrences_.assign(static_cast<size_t>(n_sides), {});
  std::vector<int> filled(static_cast<size_t>(n_sides), 0);
  for (size_t k = 0; k < quads.size(); ++k) {
    const Quad q = canonical_quad(quads[k]);
    d.crossings_.push_back({static_cast<int>(k), q});
    for (int pos = 0; pos < 4; ++pos) {
      d.occurrences_[q[pos].slot()][filled[q[pos].slot()]++] = {static_cast<int>(k), pos};
    }
  }

  UnionFind crossings(static_cast<int>(quads.size()));
  for (const auto& occ : d.occurrences_) crossings.unite(occ[0].first, occ[1].first);
  if (crossings.count_roots() != 1) {
    throw DiagramError(Kind::Disconnected, "diagram is split (its crossing graph is disconnected)");
  }

  UnionFind strands(n_sides);
  for (const Crossing& c : d.crossings_) {
    strands.unite(c.quad[0].slot(), c.quad[2].slot());
    strands.unite(c.quad[1].slot(), c.quad[3].slot());
  }
  d.n_components_ = strands.count_roots();
  return d;
}

bool LinkDiagram::is_alternating() const {
  return std::all_of(occurrences_.begin(), occurrences_.end(),
                     [](const auto& occ) { return (occ[0].second % 2) != (occ[1].second % 2); });
}

std::array<std::pair<int, int>, 2> LinkDiagram::occurrences(SideId side) const {
  return occurrences_.at(static_cast<size_t>(side.slot()));
}

std::vector<Quad> LinkDiagram::quads() const {
  std::vector<Quad> out;
  out.reserve(crossings_.size());
  for (const Crossing& c : crossings_) out.push_back(c.quad);
  return out;
}

LinkDiagram parse_pd(std::string_view text) {
  using Kind = DiagramError::Kind;
  static const std::regex record(R"(([XQ])\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");

  std::vector<Quad> quads;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto begin = line.cbegin();
    std::smatch m;
    while (std::regex_search(begin, line.cend(), m, record)) {
      const std::string gap(begin, m[0].first);
      if (gap.find_first_not_of(" \t\r,;") != std::string::npos) {
        throw DiagramError(Kind::Malformed, "line " + std::to_string(line_no) + ": unexpected text '" + gap + "'");
      }
      Quad q{};
      for (int i = 0; i < 4; ++i) q[i] = SideId{std::stoi(m[i + 2].str())};
      // X records start at the incoming under-strand; one step puts the over-strand first.
      quads.push_back(m[1].str() == "X" ? rotate_step(q) : q);
      begin = m[0].second;
    }
    const std::string rest(begin, line.cend());
    if (rest.find_first_not_of(" \t\r,;") != std::string::npos) {
      throw DiagramError(Kind::Malformed, "line " + std::to_string(line_no) + ": malformed record '" + rest + "'");
    }
  }
  return LinkDiagram::from_quads(quads);
}

LinkDiagram read_pd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError(DiagramError::Kind::Malformed, "cannot open diagram file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_pd(buffer.str());
}

std::string serialize(const LinkDiagram& d) {
  std::ostringstream os;
  for (const Crossing& c : d.crossings()) os << 'Q' << quad_text(c.quad) << '\n';
  return os.str();
}

LinkDiagram twist_knot_diagram(int n) {
  if (n < 1) throw std::invalid_argument("twist_knot_diagram: n must be >= 1");
  const int a = 1;
  const int b = 2;
  auto x = [](int k) { return 3 + k; };
  auto y = [n](int k) { return n + 5 + k; };
  std::vector<std::array<int, 4>> quads;
  quads.push_back({b, y(0), y(n + 1), a});
  quads.push_back({x(0), b, a, x(n + 1)});
  for (int k = 0; k <= n; ++k) quads.push_back({x(k + 1), y(k + 1), y(k), x(k)});
  return LinkDiagram::from_quads(quads);
}

std::vector<std::string> twist_side_names(int n) {
  std::vector<std::string> names{"a", "b"};
  for (int k = 0; k <= n + 1; ++k) names.push_back("x" + std::to_string(k));
  for (int k = 0; k <= n + 1; ++k) names.push_back("y" + std::to_string(k));
  return names;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Quad> quads;
  quads.reserve(d.crossings().size());
  for (const Crossing& c : d.crossings()) quads.push_back(rotate_step(c.quad));
  return LinkDiagram::from_quads(quads);
}

}  // namespace cvol
