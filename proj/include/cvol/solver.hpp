#pragma once

// Numerical solution of H: damped Newton on the rational residuals, a seeded
// multi-start search, and roots of integer polynomials.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cvol/polynomial.hpp"
#include "cvol/potential.hpp"

namespace cvol {

/// Coordinates held fixed (keyed by side index) and equations left out of the
/// Newton step. Convergence is still judged on every equation.
struct GaugeSpec {
  std::map<int, std::complex<double>> pinned;
  std::set<int> dropped_equations;
};

enum class NewtonStatus { Converged, Diverged, NonEssential, NotFlat };

struct NewtonOptions {
  int max_iter = 100;
  Tolerances tol;
};

struct NewtonResult {
  NewtonStatus status = NewtonStatus::Diverged;
  SolutionPoint point;
  int iterations = 0;
  double max_residual = 0.0;
};

/// Throws std::invalid_argument if `start` disagrees with a pinned value.
NewtonResult newton(const PotentialFunction& pf, const GaugeSpec& gauge, const ComplexVector& start,
                    const NewtonOptions& options = {});

/// Pins, at their current values, the free coordinates outside a maximal
/// well-conditioned column set of the reduced Jacobian at z.
GaugeSpec adapt_gauge(const PotentialFunction& pf, const GaugeSpec& gauge, const ComplexVector& z,
                      double rank_tol = 1e-8);

struct SearchConfig {
  int n_starts = 500;
  std::uint64_t seed = 0;
  double radius = 10.0;
  Tolerances tol;
  int max_iter = 100;
};

struct FoundSolution {
  SolutionPoint point;
  VolumeReport report;
  GaugeSpec gauge;
  int start_index = 0;
  double max_residual = 0.0;
};

struct SolutionSet {
  std::vector<FoundSolution> solutions;
  std::optional<size_t> geometric_index;
  int converged = 0;
  int non_essential = 0;
  int failed = 0;
};

/// Index of the solution with maximal Im V0.
std::optional<size_t> geometric_index(const std::vector<FoundSolution>& solutions);

/// Deterministic in `config`. Starts are log-uniform in radius^-1 <= |z| <= radius
/// with z_1 = 1; solutions are deduplicated by V0 modulo 4 pi^2.
SolutionSet search(const PotentialFunction& pf, const SearchConfig& config = {});

/// All complex roots, from companion-matrix eigenvalues polished by Newton in
/// long double. Throws std::domain_error for constant polynomials.
std::vector<std::complex<double>> univariate_roots(const IntPoly& p);

}  // namespace cvol
