#include <algorithm>

#include "cvol/diagram.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvol;

namespace {

DiagramError::Kind kind_of(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("expected a DiagramError for: " << text);
  return DiagramError::Kind::Malformed;
}

}  // namespace

TEST_CASE("figure-eight from Q records") {
  const LinkDiagram d = test::figure_eight();
  CHECK(d.n_crossings() == 4);
  CHECK(d.n_sides() == 8);
  CHECK(d.n_components() == 1);
  CHECK(d.is_alternating());
  for (int s = 1; s <= d.n_sides(); ++s) {
    const auto occ = d.occurrences(SideId{s});
    CHECK(occ[0] != occ[1]);
  }
}

TEST_CASE("X records are rotated one step") {
  const LinkDiagram x = parse_pd("X[7,1,6,2] X[2,6,3,5] X[5,8,4,7] X[8,3,1,4]");
  CHECK(x == test::figure_eight());
}

TEST_CASE("canonical form") {
  const Quad q{SideId{5}, SideId{2}, SideId{1}, SideId{7}};
  const Quad half{SideId{1}, SideId{7}, SideId{5}, SideId{2}};
  CHECK(canonical_quad(q) == canonical_quad(half));
  CHECK(canonical_quad(canonical_quad(q)) == canonical_quad(q));
  CHECK(canonical_quad(q) == half);

  const LinkDiagram rotated = parse_pd("Q[2,7,1,6] Q[5,2,6,3] Q[7,5,8,4] Q[4,8,3,1]");
  CHECK(rotated == test::figure_eight());
}

TEST_CASE("serialize round trip") {
  for (const LinkDiagram& d : {test::figure_eight(), twist_knot_diagram(3), read_pd_file(test::data("knot_6_1.pd")),
                               read_pd_file(test::data("whitehead.pd"))}) {
    CHECK(parse_pd(serialize(d)) == d);
  }
}

TEST_CASE("comments, separators and several records per line") {
  const LinkDiagram d = parse_pd("# header\nQ[1,6,2,7], Q[6,3,5,2];\n  Q[8,4,7,5] # tail\nQ[3,1,4,8]\n");
  CHECK(d == test::figure_eight());
}

TEST_CASE("validation errors") {
  using K = DiagramError::Kind;
  CHECK(kind_of("X[1,2,2,1]") == K::Kink);
  CHECK(kind_of("Q[1,1,2,2]") == K::Kink);
  CHECK_THROWS_AS(read_pd_file(test::data("kinked.pd")), DiagramError);
  CHECK(kind_of("Q[1,6,2,7] Q[6,3,5,2] Q[8,4,7,5] Q[3,1,4,1]") == K::Multiplicity);
  CHECK(kind_of("Q[1,6,2,9] Q[6,3,5,2] Q[8,4,7,5] Q[3,1,4,8]") == K::Malformed);
  CHECK(kind_of("X[1,6,2]") == K::Malformed);
  CHECK(kind_of("Q[1,6,2,7] hello") == K::Malformed);
  CHECK(kind_of("") == K::Malformed);
  CHECK(kind_of("Q[1,2,1,2]") == K::Malformed);
  // Two disjoint figure-eight diagrams.
  CHECK(kind_of("Q[1,6,2,7] Q[6,3,5,2] Q[8,4,7,5] Q[3,1,4,8]"
                "Q[9,14,10,15] Q[14,11,13,10] Q[16,12,15,13] Q[11,9,12,16]") == K::Disconnected);
  CHECK_THROWS_AS(read_pd_file(test::data("malformed.pd")), DiagramError);
  CHECK_THROWS_AS(read_pd_file(test::data("does_not_exist.pd")), DiagramError);
}

TEST_CASE("kink message asks for manual removal") {
  try {
    parse_pd("X[1,2,2,1]");
  } catch (const DiagramError& e) {
    CHECK(std::string(e.what()).find("remove the kink") != std::string::npos);
  }
}

TEST_CASE("twist knot diagrams") {
  CHECK_THROWS_AS(twist_knot_diagram(0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const LinkDiagram d = twist_knot_diagram(n);
    CHECK(d.n_crossings() == n + 3);
    CHECK(d.n_sides() == 2 * n + 6);
    CHECK(d.n_components() == 1);
    CHECK(twist_side_names(n).size() == static_cast<size_t>(d.n_sides()));
  }
  CHECK(twist_side_names(1) == std::vector<std::string>{"a", "b", "x0", "x1", "x2", "y0", "y1", "y2"});
}

TEST_CASE("mirror") {
  for (const LinkDiagram& d : {test::figure_eight(), twist_knot_diagram(2), read_pd_file(test::data("whitehead.pd"))}) {
    const LinkDiagram m = mirror(d);
    CHECK(mirror(m) == d);
    CHECK(m.n_crossings() == d.n_crossings());
    CHECK(m.n_components() == d.n_components());
  }
  CHECK_FALSE(mirror(test::figure_eight()) == test::figure_eight());
}

TEST_CASE("component count and alternation") {
  CHECK(read_pd_file(test::data("whitehead.pd")).n_components() == 2);
  CHECK(read_pd_file(test::data("curl_threaded.pd")).n_components() == 2);
  CHECK_FALSE(read_pd_file(test::data("figure8_flipped.pd")).is_alternating());
  CHECK(read_pd_file(test::data("knot_6_1.pd")).is_alternating());
}
