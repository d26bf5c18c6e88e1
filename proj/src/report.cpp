#include "cvol/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "cvol/twist_reference.hpp"

namespace cvol {

namespace {

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return fixed(z.real());
  return fixed(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed(std::abs(z.imag())) + "i";
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(std::complex<double> z) { return Json{{"re", round15(z.real())}, {"im", round15(z.imag())}}; }

Json to_json(const ComplexVector& z) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < z.size(); ++k) arr.push_back(to_json(z(k)));
  return arr;
}

Json to_json(const VolumeReport& r) {
  Json j;
  j["v0"] = to_json(r.v0);
  j["vol"] = round15(r.vol);
  j["cs"] = round15(r.cs);
  j["r"] = r.r;
  j["bw_volume"] = r.bw_volume ? Json(round15(*r.bw_volume)) : Json(nullptr);
  j["max_gluing_residual"] = r.max_gluing_residual ? Json(round15(*r.max_gluing_residual)) : Json(nullptr);
  return j;
}

Json to_json(const FoundSolution& s, bool geometric) {
  Json j;
  j["geometric"] = geometric;
  j["z"] = to_json(s.point.z);
  j["essential"] = s.point.essential;
  j["max_residual"] = round15(s.max_residual);
  Json pinned = Json::array();
  for (const auto& [side, value] : s.gauge.pinned) pinned.push_back(side);
  j["pinned_sides"] = pinned;
  j["report"] = to_json(s.report);
  return j;
}

Json census_json(const Triangulation& tri) {
  Json j;
  Json tets = Json::array();
  for (const Tetrahedron& t : tri.tetrahedra()) {
    tets.push_back({{"crossing", t.crossing},
                    {"corner", to_string(t.corner)},
                    {"sigma", t.sigma},
                    {"shape", {{"num", t.num.index}, {"den", t.den.index}}},
                    {"vertices", std::string(t.vertices.begin(), t.vertices.end())},
                    {"tags", t.tags}});
  }
  Json pairings = Json::array();
  for (const FacePairing& p : tri.face_pairings()) {
    pairings.push_back({{"a", {{"tet", p.a.tet}, {"omitted", p.a.omitted}, {"vertices", p.a_vertices}}},
                        {"b", {{"tet", p.b.tet}, {"omitted", p.b.omitted}, {"vertices", p.b_vertices}}}});
  }
  Json edges = Json::array();
  std::map<char, int> by_label{{'A', 0}, {'B', 0}, {'C', 0}, {'D', 0}};
  for (const EdgeClass& e : tri.edge_classes()) {
    ++by_label[e.label];
    Json members = Json::array();
    for (const EdgeMember& m : e.members) members.push_back({{"tet", m.tet}, {"slot", to_string(m.slot)}});
    edges.push_back({{"label", std::string(1, e.label)}, {"members", members}});
  }
  Json vertices = Json::array();
  for (const VertexClass& v : tri.vertex_classes()) {
    Json members = Json::array();
    for (const auto& [k, letter] : v.members) members.push_back(std::string(1, letter) + std::to_string(k));
    vertices.push_back({{"name", v.name}, {"members", members}});
  }
  j["n_tetrahedra"] = tri.tetrahedra().size();
  j["n_face_classes"] = tri.face_pairings().size();
  j["n_edge_classes"] = tri.edge_classes().size();
  j["edge_classes_by_label"] = {{"A", by_label['A']}, {"B", by_label['B']}, {"C", by_label['C']}, {"D", by_label['D']}};
  j["class_D"] = by_label['D'] == 0 ? Json("empty") : Json(by_label['D']);
  Json names = Json::array();
  for (const VertexClass& v : tri.vertex_classes()) names.push_back(v.name);
  j["vertex_class_names"] = names;
  j["tetrahedra"] = tets;
  j["face_pairings"] = pairings;
  j["edge_classes"] = edges;
  j["vertex_classes"] = vertices;
  return j;
}

Json report_header(const std::string& command, bool timestamp) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    j["generated_at"] = buf;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<TableCell> check_tables(double tol) {
  std::vector<TableCell> cells;

  for (int n = 1; n <= reference::kMaxN; ++n) {
    const IntPoly printed = reference::defining_polynomial(n);
    const IntPoly computed = twist_defining_polynomial(n);
    TableCell c{1, n, 0, "polynomial", printed.to_string(), computed.to_string(), false};
    c.pass = equal_up_to_sign(computed, printed.normalized());
    if (printed.content() != 1) c.expected += "  (content " + printed.content().str() + ")";
    cells.push_back(c);
  }

  for (int n = 1; n <= reference::kMaxN; ++n) {
    const auto printed = reference::volume_rows(n);
    const TwistResult result = twist_solutions(n);
    cells.push_back({2, n, 0, "rows", std::to_string(printed.size()), std::to_string(result.rows.size()),
                     printed.size() == result.rows.size()});
    cells.push_back({2, n, 0, "geometric", "row 1",
                     result.geometric_index ? "row " + std::to_string(*result.geometric_index + 1) : "none",
                     result.geometric_index == 0});
    for (size_t i = 0; i < std::min(printed.size(), result.rows.size()); ++i) {
      const reference::VolumeRow& p = printed[i];
      const TwistRow& r = result.rows[i];
      const int row = static_cast<int>(i) + 1;
      const bool t_ok = std::abs(p.t.real() - r.t.real()) < tol && std::abs(p.t.imag() - r.t.imag()) < tol;
      cells.push_back({2, n, row, "t", complex_text(p.t), complex_text(r.t), t_ok});
      const double vol = r.solution.report.vol;
      cells.push_back({2, n, row, "vol", fixed(p.vol), fixed(vol), std::abs(p.vol - vol) < tol});
      const double cs = r.solution.report.cs;
      const double dcs = reduce_symmetric(p.cs - cs, kPiSquared);
      cells.push_back({2, n, row, "cs", fixed(p.cs), fixed(cs) + " (mod pi^2)", std::abs(dcs) < tol});
    }
  }

  const TwistChain chain = twist_chain(reference::kMaxK);
  for (int k = 0; k <= reference::kMaxK; ++k) {
    const RationalFunction px = reference::side_x(k);
    const RationalFunction py = reference::side_y(k);
    cells.push_back({3, k, 0, "x", px.to_string(), chain.x[k].to_string(), px == chain.x[k]});
    cells.push_back({3, k, 0, "y", py.to_string(), chain.y[k].to_string(), py == chain.y[k]});
  }
  return cells;
}

}  // namespace cvol
