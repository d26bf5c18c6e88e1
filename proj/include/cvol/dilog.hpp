#pragma once

// Complex dilogarithm and its relatives, templated on the real scalar.
//
// Branch conventions: log is principal with Im in (-pi, pi]; Li2 has its cut
// on [1, inf) and points exactly on the cut take arg(1 - z) = +pi, i.e. the
// limit from below the cut.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cvol {

template <typename Real>
inline constexpr Real kPi = std::numbers::pi_v<Real>;

template <typename Real>
inline constexpr Real kPiSquaredOver6 = std::numbers::pi_v<Real> * std::numbers::pi_v<Real> / 6;

/// Principal logarithm. A signed-zero imaginary part is read as +0, so
/// negative reals map to Im = +pi.
template <typename Real>
std::complex<Real> log_p(const std::complex<Real>& z) {
  if (z.real() == Real(0) && z.imag() == Real(0)) {
    throw std::domain_error("log_p: logarithm of zero");
  }
  const std::complex<Real> w(z.real(), z.imag() == Real(0) ? Real(0) : z.imag());
  return std::log(w);
}

namespace detail {

// B_{2k} / (2k+1)!, k = 1..15.
inline constexpr std::array<long double, 15> kBernoulliOverFactorial = {
    0.02777777777777777777778L,     -0.0002777777777777777777778L, 0.000004724111866969009826153L,
    -9.185773074661963550852e-8L,   1.897886998897099907201e-9L,   -4.064761645144225526806e-11L,
    8.921691020456452555218e-13L,   -1.993929586072107568724e-14L, 4.51898002961991819165e-16L,
    -1.035651761218124701448e-17L,  2.39521862102618674574e-19L,   -5.581785874325009336283e-21L,
    1.309150755418321285812e-22L,   -3.087419802426740293242e-24L, 7.315975652702203420358e-26L,
};

// sum z^k / k^2, for |z| <= 1/2.
template <typename Real>
std::complex<Real> li2_power_series(const std::complex<Real>& z) {
  std::complex<Real> sum(0);
  std::complex<Real> power = z;
  for (int k = 1; k < 400; ++k) {
    const std::complex<Real> term = power / Real(Real(k) * Real(k));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * Real(0.25) * std::abs(sum)) break;
    power *= z;
  }
  return sum;
}

// Series in u = -log(1 - z); converges for |u| < 2 pi, used on |z| <= 1, Re z <= 1/2.
template <typename Real>
std::complex<Real> li2_bernoulli_series(const std::complex<Real>& z) {
  const std::complex<Real> u = -log_p(std::complex<Real>(1) - z);
  const std::complex<Real> u2 = u * u;
  std::complex<Real> sum = u - u2 / Real(4);
  std::complex<Real> power = u * u2;
  for (long double c : kBernoulliOverFactorial) {
    const std::complex<Real> term = power * static_cast<Real>(c);
    sum += term;
    if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * Real(0.25) * std::abs(sum)) break;
    power *= u2;
  }
  return sum;
}

// |z| <= 1.
template <typename Real>
std::complex<Real> li2_unit_disk(const std::complex<Real>& z) {
  if (std::abs(z) <= Real(0.5)) return li2_power_series(z);
  if (z.real() <= Real(0.5)) return li2_bernoulli_series(z);
  const std::complex<Real> w = std::complex<Real>(1) - z;
  const std::complex<Real> li2_w = std::abs(w) <= Real(0.5) ? li2_power_series(w) : li2_bernoulli_series(w);
  return kPiSquaredOver6<Real> - log_p(z) * log_p(w) - li2_w;
}

}  // namespace detail

/// Principal-branch dilogarithm Li2(z) = -int_0^z log(1-t)/t dt.
template <typename Real>
std::complex<Real> li2(const std::complex<Real>& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("li2: non-finite argument");
  }
  const Real modulus = std::abs(z);
  if (modulus > Real(1e300)) throw std::domain_error("li2: argument magnitude out of range");
  if (modulus == Real(0)) return {0, 0};
  if (z == std::complex<Real>(1)) return {kPiSquaredOver6<Real>, 0};
  if (modulus <= Real(1)) return detail::li2_unit_disk(z);
  // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.
  const std::complex<Real> l = log_p(-z);
  return -detail::li2_unit_disk(std::complex<Real>(1) / z) - kPiSquaredOver6<Real> - l * l / Real(2);
}

/// Bloch-Wigner function D(z) = Im Li2(z) + arg(1 - z) log|z|, the signed
/// volume of the ideal tetrahedron with shape z.
template <typename Real>
Real bloch_wigner(const std::complex<Real>& z) {
  if (z == std::complex<Real>(0) || z == std::complex<Real>(1)) {
    throw std::domain_error("bloch_wigner: degenerate tetrahedron shape (0 or 1)");
  }
  return li2(z).imag() + log_p(std::complex<Real>(1) - z).imag() * std::log(std::abs(z));
}

/// Lhat([u; p, q]) = Li2(u) - pi^2/6 + q pi i log(u) / 2 + log(1 - u)(log u + p pi i) / 2.
template <typename Real>
std::complex<Real> lhat(const std::complex<Real>& u, long p, long q) {
  if (u == std::complex<Real>(0) || u == std::complex<Real>(1)) {
    throw std::domain_error("lhat: degenerate argument (0 or 1)");
  }
  const std::complex<Real> i_pi(0, kPi<Real>);
  const std::complex<Real> log_u = log_p(u);
  const std::complex<Real> log_1mu = log_p(std::complex<Real>(1) - u);
  return li2(u) - kPiSquaredOver6<Real> + Real(0.5) * Real(q) * i_pi * log_u +
         Real(0.5) * log_1mu * (log_u + Real(p) * i_pi);
}

}  // namespace cvol
