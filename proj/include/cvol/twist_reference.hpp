#pragma once

// Published reference values for the twist knots T_1..T_5: defining
// polynomials, complex volumes at each root, and the side functions x_k, y_k.

#include <complex>
#include <vector>

#include "cvol/polynomial.hpp"

namespace cvol::reference {

/// Defining polynomial of t as printed, ascending coefficients.
IntPoly defining_polynomial(int n);

struct VolumeRow {
  std::complex<double> t;
  double vol;
  double cs;
};

/// Rows as printed (geometric row first, Re t ascending).
std::vector<VolumeRow> volume_rows(int n);

/// x_k (k = 0..5) as printed.
RationalFunction side_x(int k);
/// y_k (k = 0..5) as printed.
RationalFunction side_y(int k);

inline constexpr int kMaxN = 5;
inline constexpr int kMaxK = 5;

}  // namespace cvol::reference
