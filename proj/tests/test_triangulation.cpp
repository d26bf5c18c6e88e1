#include <map>
#include <set>

#include "cvol/solver.hpp"
#include "cvol/triangulation.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvol;
using cd = std::complex<double>;

namespace {

std::vector<LinkDiagram> census_diagrams() {
  return {test::figure_eight(),
          read_pd_file(test::data("figure8_flipped.pd")),
          read_pd_file(test::data("whitehead.pd")),
          read_pd_file(test::data("knot_6_1.pd")),
          read_pd_file(test::data("curl_threaded.pd")),
          twist_knot_diagram(1),
          twist_knot_diagram(4)};
}

double max_residual(const std::vector<EdgeResidual>& rs, const std::string& labels) {
  double worst = 0;
  for (const EdgeResidual& r : rs)
    if (labels.find(r.label) != std::string::npos) worst = std::max(worst, r.residual);
  return worst;
}

}  // namespace

TEST_CASE("census counts") {
  for (const LinkDiagram& d : census_diagrams()) {
    const Triangulation tri = build_triangulation(d);
    const size_t c = d.n_crossings();
    CHECK(tri.tetrahedra().size() == 4 * c);
    CHECK(tri.face_pairings().size() == 8 * c);
    CHECK(tri.vertex_classes().size() == static_cast<size_t>(2 + d.n_components()));
    size_t slots = 0;
    for (const EdgeClass& e : tri.edge_classes()) slots += e.members.size();
    CHECK(slots == 24 * c);
  }
  CHECK(build_triangulation(test::figure_eight()).vertex_classes().size() == 3);
  CHECK(build_triangulation(read_pd_file(test::data("whitehead.pd"))).vertex_classes().size() == 4);
}

TEST_CASE("every face is glued exactly once") {
  for (const LinkDiagram& d : census_diagrams()) {
    const Triangulation tri = build_triangulation(d);
    std::map<std::pair<int, int>, int> uses;
    for (const FacePairing& p : tri.face_pairings()) {
      ++uses[{p.a.tet, p.a.omitted}];
      ++uses[{p.b.tet, p.b.omitted}];
      CHECK(p.a.tet != p.b.tet);
    }
    CHECK(uses.size() == 4 * tri.tetrahedra().size());
    for (const auto& [face, count] : uses) CHECK(count == 1);
  }
}

TEST_CASE("tetrahedra around each octahedron") {
  const Triangulation tri = build_triangulation(test::figure_eight());
  for (const Tetrahedron& t : tri.tetrahedra()) {
    CHECK(t.vertices[0] == 'E');
    CHECK(t.vertices[1] == 'F');
    CHECK(t.sigma == ((t.corner == Corner::BC || t.corner == Corner::DA) ? -1 : 1));
  }
}

TEST_CASE("class D is empty exactly for alternating diagrams") {
  auto count_d = [](const LinkDiagram& d) {
    int n = 0;
    for (const EdgeClass& e : build_triangulation(d).edge_classes()) n += e.label == 'D';
    return n;
  };
  CHECK(count_d(test::figure_eight()) == 0);
  CHECK(count_d(read_pd_file(test::data("knot_6_1.pd"))) == 0);
  CHECK(count_d(read_pd_file(test::data("whitehead.pd"))) == 0);
  CHECK(count_d(twist_knot_diagram(3)) == 0);
  CHECK(count_d(read_pd_file(test::data("figure8_flipped.pd"))) > 0);
}

TEST_CASE("twisted identifications produce class B") {
  for (const LinkDiagram& d : census_diagrams()) {
    int b = 0;
    for (const EdgeClass& e : build_triangulation(d).edge_classes()) b += e.label == 'B';
    CHECK(b > 0);
  }
}

TEST_CASE("shape parameters") {
  std::mt19937_64 rng(41);
  const Triangulation tri = build_triangulation(twist_knot_diagram(2));
  const ComplexVector z = test::random_vector(rng, tri.n_sides());
  for (const Tetrahedron& t : tri.tetrahedra()) {
    const cd u = shape_of_edge_slot(t, EdgeSlot::EF, z);
    CHECK(std::abs(u - z(t.num.index - 1) / z(t.den.index - 1)) < 1e-14 * std::abs(u));
    CHECK(shape_of_edge_slot(t, EdgeSlot::XY, z) == u);
    const cd p = shape_of_edge_slot(t, EdgeSlot::EY, z);
    const cd pp = shape_of_edge_slot(t, EdgeSlot::EX, z);
    CHECK(std::abs(u * p * pp + 1.0) < 1e-12);
    CHECK(shape_of_edge_slot(t, EdgeSlot::FX, z) == p);
    CHECK(shape_of_edge_slot(t, EdgeSlot::FY, z) == pp);
  }
}

TEST_CASE("classes A and C close up at any point") {
  std::mt19937_64 rng(42);
  for (const LinkDiagram& d : census_diagrams()) {
    const Triangulation tri = build_triangulation(d);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexVector z = test::random_vector(rng, tri.n_sides());
      CHECK(max_residual(gluing_residuals(tri, z), "AC") < 1e-12);
    }
  }
}

TEST_CASE("classes B and D impose conditions") {
  std::mt19937_64 rng(43);
  const Triangulation tri = build_triangulation(test::figure_eight());
  const ComplexVector z = test::random_vector(rng, tri.n_sides());
  CHECK(max_residual(gluing_residuals(tri, z), "B") > 0.1);
  const Triangulation flipped = build_triangulation(read_pd_file(test::data("figure8_flipped.pd")));
  CHECK(max_residual(gluing_residuals(flipped, test::random_vector(rng, flipped.n_sides())), "D") > 0.1);
}

TEST_CASE("gluing equations hold at solutions of H") {
  for (const test::TwistPoint& p : test::twist_points()) {
    const Triangulation tri = build_triangulation(twist_knot_diagram(p.n));
    CHECK(max_residual(gluing_residuals(tri, p.z), "ABCD") < 1e-10);
  }
  const LinkDiagram fig8 = test::figure_eight();
  const Triangulation tri = build_triangulation(fig8);
  const SolutionSet set = search(build_potential(fig8));
  REQUIRE_FALSE(set.solutions.empty());
  for (const FoundSolution& s : set.solutions) CHECK(max_residual(gluing_residuals(tri, s.point.z), "ABCD") < 1e-10);
}

TEST_CASE("Bloch-Wigner volume agrees with Im V0") {
  for (const test::TwistPoint& p : test::twist_points()) {
    const Triangulation tri = build_triangulation(twist_knot_diagram(p.n));
    CHECK(std::abs(bw_volume(tri, p.z) - p.report.vol) < 1e-9);
  }
  const LinkDiagram fig8 = test::figure_eight();
  const Triangulation tri = build_triangulation(fig8);
  const SolutionSet set = search(build_potential(fig8));
  REQUIRE(set.geometric_index);
  VolumeReport r = set.solutions[*set.geometric_index].report;
  cross_check(tri, set.solutions[*set.geometric_index].point.z, r);
  REQUIRE(r.bw_volume);
  CHECK(std::abs(*r.bw_volume - 2.0298832128193) < 1e-9);
  CHECK(*r.max_gluing_residual < 1e-10);
}

TEST_CASE("real solutions have zero volume") {
  int real_rows = 0;
  for (int n = 1; n <= 5; ++n) {
    const Triangulation tri = build_triangulation(twist_knot_diagram(n));
    for (const TwistRow& row : twist_solutions(n).rows) {
      if (std::abs(row.t.imag()) > 1e-12) continue;
      ++real_rows;
      CHECK(std::abs(bw_volume(tri, row.solution.point.z)) < 1e-9);
      CHECK(std::abs(row.solution.report.vol) < 1e-9);
    }
  }
  CHECK(real_rows > 0);
}
