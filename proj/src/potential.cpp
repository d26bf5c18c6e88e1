#include "cvol/potential.hpp"

#include <cmath>

namespace cvol {

namespace {

constexpr std::complex<double> kIPi{0.0, std::numbers::pi};

int shift_at(const std::vector<int>& shifts, size_t i) { return shifts.empty() ? 0 : shifts.at(i); }

}  // namespace

PotentialFunction::PotentialFunction(std::vector<DilogTerm> terms, int n_sides)
    : terms_(std::move(terms)), n_sides_(n_sides), incidences_(static_cast<size_t>(n_sides)) {
  for (size_t i = 0; i < terms_.size(); ++i) {
    const DilogTerm& t = terms_[i];
    if (t.num == t.den) throw std::invalid_argument("dilog term with equal numerator and denominator");
    if (t.num.index < 1 || t.num.index > n_sides || t.den.index < 1 || t.den.index > n_sides) {
      throw std::invalid_argument("dilog term references an unknown side");
    }
    incidences_[t.num.slot()].push_back({static_cast<int>(i), -t.sign});
    incidences_[t.den.slot()].push_back({static_cast<int>(i), t.sign});
  }
}

PotentialFunction build_potential(const LinkDiagram& d) {
  std::vector<DilogTerm> terms;
  terms.reserve(4 * d.crossings().size());
  for (const Crossing& c : d.crossings()) {
    const auto& [a, b, cc, dd] = c.quad;
    terms.push_back({+1, b, a});
    terms.push_back({-1, b, cc});
    terms.push_back({+1, dd, cc});
    terms.push_back({-1, dd, a});
  }
  return PotentialFunction(std::move(terms), d.n_sides());
}

ComplexMatrix h_jacobian(const PotentialFunction& pf, const ComplexVector& z) {
  const int n = pf.n_sides();
  ComplexMatrix jac = ComplexMatrix::Zero(n, n);
  const ComplexVector residual = h_residuals(pf, z);
  for (int k = 0; k < n; ++k) {
    const std::complex<double> product = residual(k) + 1.0;
    for (const Incidence& inc : pf.incidences(SideId{k + 1})) {
      const DilogTerm& t = pf.terms()[inc.term];
      const std::complex<double> r = term_ratio(t, z);
      // d log(1 - r) = -dr / (1 - r); dr/dz_num = r / z_num, dr/dz_den = -r / z_den.
      const std::complex<double> scale = double(inc.exponent) * product / (1.0 - r);
      jac(k, t.num.slot()) -= scale * r / z(t.num.slot());
      jac(k, t.den.slot()) += scale * r / z(t.den.slot());
    }
  }
  return jac;
}

bool is_essential(const PotentialFunction& pf, const ComplexVector& z, double tol) {
  for (const DilogTerm& t : pf.terms()) {
    const std::complex<double> num = z(t.num.slot());
    const std::complex<double> den = z(t.den.slot());
    if (!std::isfinite(std::abs(num)) || !std::isfinite(std::abs(den))) return false;
    if (std::abs(den) <= tol * std::abs(num) || std::abs(num) <= tol * std::abs(den)) return false;
    if (std::abs(num / den - 1.0) <= tol) return false;
  }
  return true;
}

std::vector<int> flattening(const PotentialFunction& pf, const ComplexVector& z, double tol,
                            const BranchChoice& branch) {
  ComplexVector logd = ComplexVector::Zero(pf.n_sides());
  for (size_t i = 0; i < pf.terms().size(); ++i) {
    const DilogTerm& t = pf.terms()[i];
    const std::complex<double> one_minus = 1.0 - term_ratio(t, z);
    if (one_minus == 0.0) throw FlatteningError("flattening undefined: a term ratio equals 1");
    const std::complex<double> l = log_p(one_minus) + 2.0 * kIPi * double(shift_at(branch.li2_shift, i));
    logd(t.num.slot()) -= double(t.sign) * l;
    logd(t.den.slot()) += double(t.sign) * l;
  }
  std::vector<int> r(static_cast<size_t>(pf.n_sides()));
  for (int k = 0; k < pf.n_sides(); ++k) {
    const double ratio = logd(k).imag() / std::numbers::pi;
    r[k] = static_cast<int>(std::lround(ratio));
    if (std::abs(logd(k) - double(r[k]) * kIPi) > tol) {
      throw FlatteningError("side " + std::to_string(k + 1) + ": z dV/dz = (" + std::to_string(logd(k).real()) +
                            ", " + std::to_string(logd(k).imag()) + ") is not an integer multiple of pi i");
    }
  }
  return r;
}

VolumeReport eval_v0(const PotentialFunction& pf, const ComplexVector& z, const Tolerances& tol,
                     const BranchChoice& branch) {
  VolumeReport report;
  report.r = flattening(pf, z, tol.flat, branch);

  std::complex<double> v(0.0);
  for (size_t i = 0; i < pf.terms().size(); ++i) {
    const DilogTerm& t = pf.terms()[i];
    const std::complex<double> u = term_ratio(t, z);
    v += double(t.sign) * (li2(u) - 2.0 * kIPi * double(shift_at(branch.li2_shift, i)) * log_p(u));
  }
  for (int k = 0; k < pf.n_sides(); ++k) {
    const std::complex<double> log_z = log_p(z(k)) + 2.0 * kIPi * double(shift_at(branch.log_shift, k));
    v -= double(report.r[k]) * kIPi * log_z;
  }
  report.v0 = v;
  report.vol = v.imag();
  report.cs = reduce_symmetric(-v.real(), kPiSquared);
  return report;
}

double reduce_symmetric(double x, double period) {
  double y = x - period * std::floor(x / period + 0.5);
  if (y <= -period / 2) y += period;
  return y;
}

double distance_mod(std::complex<double> a, std::complex<double> b, double period) {
  const std::complex<double> d = a - b;
  return std::abs(std::complex<double>(reduce_symmetric(d.real(), period), d.imag()));
}

}  // namespace cvol
