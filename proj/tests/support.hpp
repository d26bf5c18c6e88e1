#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "cvol/diagram.hpp"
#include "cvol/twist.hpp"

namespace cvol::test {

inline std::string data(const std::string& name) { return std::string(CVOL_TEST_DATA) + "/" + name; }

inline LinkDiagram figure_eight() { return read_pd_file(data("figure8.pd")); }

/// Random nonzero complex number with log|z| uniform in [-spread, spread].
inline std::complex<double> random_point(std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> m(-spread, spread);
  std::uniform_real_distribution<double> a(-3.14159, 3.14159);
  return std::polar(std::exp(m(rng)), a(rng));
}

inline ComplexVector random_vector(std::mt19937_64& rng, int n, double spread = 1.0) {
  ComplexVector z(n);
  for (int k = 0; k < n; ++k) z(k) = random_point(rng, spread);
  return z;
}

/// Every twist-knot solution for n = 1..5, with its n.
struct TwistPoint {
  int n;
  ComplexVector z;
  VolumeReport report;
};

inline const std::vector<TwistPoint>& twist_points() {
  static const std::vector<TwistPoint> points = [] {
    std::vector<TwistPoint> out;
    for (int n = 1; n <= 5; ++n) {
      for (const TwistRow& r : twist_solutions(n).rows) out.push_back({n, r.solution.point.z, r.solution.report});
    }
    return out;
  }();
  return points;
}

/// |x - round(x)|.
inline double off_integer(double x) { return std::abs(x - std::round(x)); }

}  // namespace cvol::test
