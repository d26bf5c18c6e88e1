#include <Eigen/QR>
#include <algorithm>

#include "cvol/solver.hpp"
#include "cvol/twist.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cvol;
using cd = std::complex<double>;

namespace {

GaugeSpec twist_gauge(int n) {
  GaugeSpec g;
  g.pinned = {{1, 2.0}, {2, -1.0}, {2 * n + 6, 1.0}};
  g.dropped_equations = {2 * n + 6};
  return g;
}

bool contains_v0(const SolutionSet& set, cd v0, double tol = 1e-6) {
  return std::any_of(set.solutions.begin(), set.solutions.end(), [&](const FoundSolution& s) {
    return distance_mod(s.report.v0, v0, 4 * kPiSquared) < tol;
  });
}

}  // namespace

TEST_CASE("newton keeps an exact solution") {
  const TwistResult t1 = twist_solutions(1);
  const PotentialFunction pf = build_potential(twist_knot_diagram(1));
  const NewtonResult r = newton(pf, twist_gauge(1), t1.rows[0].solution.point.z);
  CHECK(r.status == NewtonStatus::Converged);
  CHECK(r.iterations <= 2);
  CHECK((r.point.z - t1.rows[0].solution.point.z).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("newton rejects a start that violates a pin") {
  const PotentialFunction pf = build_potential(twist_knot_diagram(1));
  ComplexVector z = twist_solutions(1).rows[0].solution.point.z;
  z(0) = 2.5;
  CHECK_THROWS_AS(newton(pf, twist_gauge(1), z), std::invalid_argument);
}

TEST_CASE("newton returns to the same point from a perturbed start") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n) {
    const PotentialFunction pf = build_potential(twist_knot_diagram(n));
    const GaugeSpec g = twist_gauge(n);
    for (const TwistRow& row : twist_solutions(n).rows) {
      ComplexVector z = row.solution.point.z;
      for (int k = 0; k < z.size(); ++k) {
        if (!g.pinned.contains(k + 1)) z(k) += 1e-3 * test::random_point(rng, 0.0);
      }
      const NewtonResult r = newton(pf, g, z);
      REQUIRE(r.status == NewtonStatus::Converged);
      CHECK((r.point.z - row.solution.point.z).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("figure-eight search") {
  const PotentialFunction pf = build_potential(test::figure_eight());
  const SolutionSet set = search(pf);
  REQUIRE(set.geometric_index);
  const FoundSolution& g = set.solutions[*set.geometric_index];
  CHECK(std::abs(g.report.vol - 2.0299) < 1e-4);
  CHECK(std::abs(g.report.cs) < 1e-9);
  for (const FoundSolution& s : set.solutions) {
    CHECK(s.max_residual < 1e-12);
    CHECK(s.point.essential);
    CHECK(h_residuals(pf, s.point.z).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.point.z(0) == cd(1.0));
  }
  for (size_t i = 0; i < set.solutions.size(); ++i)
    for (size_t j = i + 1; j < set.solutions.size(); ++j)
      CHECK(distance_mod(set.solutions[i].report.v0, set.solutions[j].report.v0, 4 * kPiSquared) > 1e-6);
}

TEST_CASE("the adapted gauge leaves a nonsingular reduced Jacobian") {
  const PotentialFunction pf = build_potential(twist_knot_diagram(2));
  SearchConfig config;
  config.n_starts = 200;
  for (const FoundSolution& s : search(pf, config).solutions) {
    std::vector<int> rows, cols;
    for (int k = 0; k < pf.n_sides(); ++k) {
      if (!s.gauge.dropped_equations.contains(k + 1)) rows.push_back(k);
      if (!s.gauge.pinned.contains(k + 1)) cols.push_back(k);
    }
    const ComplexMatrix j = h_jacobian(pf, s.point.z)(rows, cols) * s.point.z(cols).asDiagonal();
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(j);
    qr.setThreshold(1e-8);
    CHECK(qr.rank() == static_cast<Eigen::Index>(cols.size()));
  }
}

TEST_CASE("search reaches every twist-knot value for T_2") {
  const SolutionSet set = search(build_potential(twist_knot_diagram(2)));
  for (const TwistRow& row : twist_solutions(2).rows) CHECK(contains_v0(set, row.solution.report.v0));
}

TEST_CASE("search is deterministic") {
  const PotentialFunction pf = build_potential(twist_knot_diagram(1));
  SearchConfig config;
  config.n_starts = 100;
  config.seed = 7;
  const SolutionSet a = search(pf, config);
  const SolutionSet b = search(pf, config);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(a.solutions[i].point.z == b.solutions[i].point.z);
    CHECK(a.solutions[i].start_index == b.solutions[i].start_index);
  }
  CHECK(a.converged == b.converged);
}

TEST_CASE("a curl threaded by another strand has no essential solution") {
  const SolutionSet set = search(build_potential(read_pd_file(test::data("curl_threaded.pd"))));
  CHECK(set.solutions.empty());
  CHECK_FALSE(set.geometric_index);
}

TEST_CASE("mirror diagram has negated volumes") {
  const SolutionSet a = search(build_potential(test::figure_eight()));
  const SolutionSet b = search(build_potential(mirror(test::figure_eight())));
  CHECK(a.solutions.size() == b.solutions.size());
  for (const FoundSolution& s : a.solutions) CHECK(contains_v0(b, -s.report.v0));
}

TEST_CASE("twist solutions") {
  for (int n = 1; n <= 5; ++n) {
    const TwistResult r = twist_solutions(n);
    CHECK(r.rows.size() == static_cast<size_t>(r.polynomial.degree()));
    CHECK(r.rows.size() == static_cast<size_t>(n + 1));
    REQUIRE(r.geometric_index);
    CHECK(*r.geometric_index == 0);
    for (size_t i = 0; i < r.rows.size(); ++i) {
      CHECK(r.rows[i].verified);
      CHECK(r.rows[i].solution.point.essential);
      if (i != *r.geometric_index) CHECK(r.rows[i].solution.report.vol < r.rows[0].solution.report.vol - 1e-6);
    }
  }
  CHECK(twist_solutions(1).rows[0].solution.report.vol > 2.0);
  CHECK(std::abs(twist_solutions(4).rows[4].t - cd(2.5257)) < 1e-4);
  CHECK(std::abs(twist_solutions(4).rows[4].solution.report.cs + 0.8822) < 1e-4);
}

TEST_CASE("twist pipeline stays verified up to n = 12") {
  for (int n = 6; n <= 12; ++n) {
    const TwistResult r = twist_solutions(n);
    CHECK(r.rows.size() == static_cast<size_t>(n + 1));
    for (const TwistRow& row : r.rows) CHECK(row.verified);
    // Volumes of twist knots increase towards that of the Whitehead link.
    CHECK(r.rows[*r.geometric_index].solution.report.vol < 3.6638623767088);
  }
}
