#pragma once

// Exact pipeline for the twist knots T_n: with a = 2, b = -1, y_{n+1} = 1 the
// equations of H determine x_{n+1} = 3 and every other side as a rational
// function of t = x_0.

#include <vector>

#include "cvol/polynomial.hpp"
#include "cvol/solver.hpp"

namespace cvol {

/// x_0..x_n and y_0..y_n as functions of t.
struct TwistChain {
  std::vector<RationalFunction> x;
  std::vector<RationalFunction> y;
};

TwistChain twist_chain(int n);

/// Numerator of y_n (3t - 4) - 3t with content and denominator factors removed.
IntPoly twist_defining_polynomial(int n);

/// Side vector of twist_knot_diagram(n) at parameter t.
ComplexVector twist_point(int n, const TwistChain& chain, std::complex<double> t);

struct TwistRow {
  std::complex<double> t;
  FoundSolution solution;
  bool verified = false;  // every equation of H within tol.solve (after polishing if needed)
  bool polished = false;
};

struct TwistResult {
  int n = 0;
  IntPoly polynomial;
  std::vector<TwistRow> rows;  // Re t ascending, positive Im first
  std::optional<size_t> geometric_index;
};

TwistResult twist_solutions(int n, const Tolerances& tol = {});

}  // namespace cvol
