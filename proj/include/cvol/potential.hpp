#pragma once

// The dilogarithm potential of a link diagram and the quantities derived from
// it: log-derivatives z_k dV/dz_k, the equation set H in branch-free rational
// form, flattening integers and the corrected potential V0.

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvol/diagram.hpp"
#include "cvol/dilog.hpp"

namespace cvol {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct Tolerances {
  double solve = 1e-12;      // max |H residual| at an accepted solution
  double flat = 1e-8;        // |z_k dV/dz_k - r_k pi i|
  double essential = 1e-8;   // distance of every term ratio from {0, 1, inf}
  double dedupe = 1e-6;      // V0 distance (mod 4 pi^2) below which two solutions coincide
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FlatteningError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// sign * Li2(z_num / z_den).
struct DilogTerm {
  int sign = 1;
  SideId num;
  SideId den;
};

/// One incidence of a side in a term: the factor (1 - ratio)^exponent enters
/// exp(z_k dV/dz_k), exponent = -sign for a numerator and +sign for a denominator.
struct Incidence {
  int term = 0;
  int exponent = 0;
};

class PotentialFunction {
 public:
  PotentialFunction(std::vector<DilogTerm> terms, int n_sides);

  [[nodiscard]] const std::vector<DilogTerm>& terms() const { return terms_; }
  [[nodiscard]] int n_sides() const { return n_sides_; }
  [[nodiscard]] const std::vector<Incidence>& incidences(SideId side) const {
    return incidences_[static_cast<size_t>(side.slot())];
  }

 private:
  std::vector<DilogTerm> terms_;
  int n_sides_;
  std::vector<std::vector<Incidence>> incidences_;
};

/// Crossing (a, b, c, d) contributes Li2(b/a) - Li2(b/c) + Li2(d/c) - Li2(d/a).
PotentialFunction build_potential(const LinkDiagram& d);

template <typename Derived>
typename Derived::Scalar term_ratio(const DilogTerm& t, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  const Scalar den = z(t.den.slot());
  if (den == Scalar(0)) throw NumericalError("term ratio has zero denominator (side " + std::to_string(t.den.index) + ")");
  const Scalar r = z(t.num.slot()) / den;
  if (r == Scalar(0)) throw NumericalError("term ratio vanishes (side " + std::to_string(t.num.index) + ")");
  return r;
}

/// V(z) on the principal branch.
template <typename Derived>
typename Derived::Scalar eval_v(const PotentialFunction& pf, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (const DilogTerm& t : pf.terms()) sum += typename Scalar::value_type(t.sign) * li2(term_ratio(t, z));
  return sum;
}

/// z_k dV/dz_k for every side, principal logarithms.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> log_derivatives(const PotentialFunction& pf,
                                                                           const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(pf.n_sides());
  for (const DilogTerm& t : pf.terms()) {
    const Scalar one_minus = Scalar(1) - term_ratio(t, z);
    if (one_minus == Scalar(0)) throw NumericalError("log-derivative undefined: a term ratio equals 1");
    const Scalar l = log_p(one_minus);
    out(t.num.slot()) -= Real(t.sign) * l;
    out(t.den.slot()) += Real(t.sign) * l;
  }
  return out;
}

template <typename Derived>
typename Derived::Scalar log_derivative(const PotentialFunction& pf, const Eigen::MatrixBase<Derived>& z,
                                        SideId side) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Scalar::value_type;
  Scalar sum(0);
  for (const Incidence& inc : pf.incidences(side)) {
    const Scalar one_minus = Scalar(1) - term_ratio(pf.terms()[inc.term], z);
    if (one_minus == Scalar(0)) throw NumericalError("log-derivative undefined: a term ratio equals 1");
    sum += Real(inc.exponent) * log_p(one_minus);
  }
  return sum;
}

/// Component k is prod (1 - ratio)^exponent - 1 over the incidences of side k.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> h_residuals(const PotentialFunction& pf,
                                                                       const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(pf.n_sides());
  for (int k = 0; k < pf.n_sides(); ++k) {
    Scalar product(1);
    for (const Incidence& inc : pf.incidences(SideId{k + 1})) {
      const DilogTerm& t = pf.terms()[inc.term];
      const Scalar factor = Scalar(1) - term_ratio(t, z);
      if (inc.exponent < 0) {
        if (factor == Scalar(0)) {
          throw NumericalError("H residual undefined: ratio z" + std::to_string(t.num.index) + "/z" +
                               std::to_string(t.den.index) + " equals 1");
        }
        product /= factor;
      } else {
        product *= factor;
      }
    }
    out(k) = product - Scalar(1);
  }
  return out;
}

/// Jacobian of the residual map: J(k, j) = d(prod_k) / dz_j.
ComplexMatrix h_jacobian(const PotentialFunction& pf, const ComplexVector& z);

/// Per-side log-branch offsets (log z_k + 2 pi i m_k) and per-term dilogarithm
/// sheet offsets (analytic continuation Li2(u) - 2 pi i a log u together with
/// log(1 - u) + 2 pi i a). Empty vectors mean principal branches.
struct BranchChoice {
  std::vector<int> log_shift;
  std::vector<int> li2_shift;
};

struct SolutionPoint {
  ComplexVector z;
  std::vector<int> r;
  bool essential = false;
};

struct VolumeReport {
  std::complex<double> v0;
  double vol = 0.0;
  double cs = 0.0;
  std::vector<int> r;
  std::optional<double> bw_volume;
  std::optional<double> max_gluing_residual;
};

/// True iff every term ratio keeps distance > tol from 0, 1 and infinity.
bool is_essential(const PotentialFunction& pf, const ComplexVector& z, double tol);

/// r_k with z_k dV/dz_k = r_k pi i; throws FlatteningError if not integral within tol.
std::vector<int> flattening(const PotentialFunction& pf, const ComplexVector& z, double tol,
                            const BranchChoice& branch = {});

/// V0 = V - sum r_k pi i log z_k, vol = Im V0, cs = -Re V0 reduced into (-pi^2/2, pi^2/2].
VolumeReport eval_v0(const PotentialFunction& pf, const ComplexVector& z, const Tolerances& tol = {},
                     const BranchChoice& branch = {});

/// x reduced into (-period/2, period/2].
double reduce_symmetric(double x, double period);

/// |a - b| with the real part taken modulo `period`.
double distance_mod(std::complex<double> a, std::complex<double> b, double period);

inline constexpr double kPiSquared = std::numbers::pi * std::numbers::pi;

}  // namespace cvol
