#include "cvol/solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <random>

namespace cvol {

namespace {

std::optional<ComplexVector> try_residuals(const PotentialFunction& pf, const ComplexVector& z) {
  try {
    ComplexVector r = h_residuals(pf, z);
    if (!r.allFinite()) return std::nullopt;
    return r;
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

struct Reduction {
  std::vector<int> rows;
  std::vector<int> cols;
};

Reduction reduce(const GaugeSpec& gauge, int n) {
  Reduction out;
  for (int k = 0; k < n; ++k) {
    if (!gauge.dropped_equations.contains(k + 1)) out.rows.push_back(k);
    if (!gauge.pinned.contains(k + 1)) out.cols.push_back(k);
  }
  return out;
}

double norm_of(const ComplexVector& v, const std::vector<int>& rows) { return v(rows).norm(); }

bool in_range(const ComplexVector& z) {
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double m = std::abs(z(k));
    if (!(m > 1e-12 && m < 1e12)) return false;
  }
  return true;
}

}  // namespace

NewtonResult newton(const PotentialFunction& pf, const GaugeSpec& gauge, const ComplexVector& start,
                    const NewtonOptions& options) {
  const int n = pf.n_sides();
  if (start.size() != n) throw std::invalid_argument("newton: start vector has the wrong length");
  ComplexVector z = start;
  for (const auto& [side, value] : gauge.pinned) {
    if (side < 1 || side > n) throw std::invalid_argument("newton: pinned side out of range");
    if (std::abs(z(side - 1) - value) > 1e-12 * std::max(1.0, std::abs(value))) {
      throw std::invalid_argument("newton: start violates pinned coordinate z" + std::to_string(side));
    }
    z(side - 1) = value;
  }
  const Reduction red = reduce(gauge, n);

  NewtonResult result;
  bool converged = false;
  for (int iter = 0; iter <= options.max_iter; ++iter) {
    const auto f = try_residuals(pf, z);
    if (!f) break;
    result.iterations = iter;
    result.max_residual = f->cwiseAbs().maxCoeff();
    if (result.max_residual < options.tol.solve) {
      converged = true;
      break;
    }
    if (iter == options.max_iter || red.cols.empty()) break;

    const ComplexMatrix jac = h_jacobian(pf, z)(red.rows, red.cols);
    const ComplexVector fk = (*f)(red.rows);
    const ComplexVector step = jac.completeOrthogonalDecomposition().solve(-fk);
    if (!step.allFinite()) break;

    const double base = fk.norm();
    bool accepted = false;
    double lambda = 1.0;
    for (int tries = 0; tries < 40 && !accepted; ++tries, lambda *= 0.5) {
      ComplexVector trial = z;
      trial(red.cols) += lambda * step;
      if (!in_range(trial)) continue;
      const auto ft = try_residuals(pf, trial);
      if (ft && norm_of(*ft, red.rows) < base) {
        z = std::move(trial);
        accepted = true;
      }
    }
    if (!accepted) break;
  }

  result.point.z = z;
  if (!converged) {
    result.status = NewtonStatus::Diverged;
    return result;
  }
  result.point.essential = is_essential(pf, z, options.tol.essential);
  if (!result.point.essential) {
    result.status = NewtonStatus::NonEssential;
    return result;
  }
  try {
    result.point.r = flattening(pf, z, options.tol.flat);
  } catch (const FlatteningError&) {
    result.status = NewtonStatus::NotFlat;
    return result;
  }
  result.status = NewtonStatus::Converged;
  return result;
}

GaugeSpec adapt_gauge(const PotentialFunction& pf, const GaugeSpec& gauge, const ComplexVector& z, double rank_tol) {
  const Reduction red = reduce(gauge, pf.n_sides());
  if (red.cols.empty()) return gauge;
  // Columns in logarithmic coordinates, so the rank test is scale free.
  const ComplexMatrix jac = h_jacobian(pf, z)(red.rows, red.cols) * z(red.cols).asDiagonal();
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(jac);
  qr.setThreshold(rank_tol);
  GaugeSpec out = gauge;
  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index i = qr.rank(); i < perm.size(); ++i) {
    const int side = red.cols[static_cast<size_t>(perm(i))] + 1;
    out.pinned[side] = z(side - 1);
  }
  return out;
}

std::optional<size_t> geometric_index(const std::vector<FoundSolution>& solutions) {
  std::optional<size_t> best;
  for (size_t i = 0; i < solutions.size(); ++i) {
    if (!best || solutions[i].report.vol > solutions[*best].report.vol) best = i;
  }
  return best;
}

SolutionSet search(const PotentialFunction& pf, const SearchConfig& config) {
  const int n = pf.n_sides();
  GaugeSpec base;
  base.pinned[1] = 1.0;
  base.dropped_equations.insert(n);

  NewtonOptions options;
  options.max_iter = config.max_iter;
  options.tol = config.tol;

  std::mt19937_64 rng(config.seed);
  const double log_r = std::log(config.radius);
  std::uniform_real_distribution<double> modulus(-log_r, log_r);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  SolutionSet set;
  for (int s = 0; s < config.n_starts; ++s) {
    ComplexVector start(n);
    start(0) = 1.0;
    for (int k = 1; k < n; ++k) {
      const double m = std::exp(modulus(rng));
      start(k) = std::polar(m, angle(rng));
    }

    NewtonResult res = newton(pf, base, start, options);
    if (res.status == NewtonStatus::NonEssential) {
      ++set.non_essential;
      continue;
    }
    if (res.status != NewtonStatus::Converged) {
      ++set.failed;
      continue;
    }
    ++set.converged;

    GaugeSpec gauge = adapt_gauge(pf, base, res.point.z);
    if (gauge.pinned.size() > base.pinned.size()) {
      NewtonResult polished = newton(pf, gauge, res.point.z, options);
      if (polished.status == NewtonStatus::Converged) res = std::move(polished);
    }

    VolumeReport report;
    try {
      report = eval_v0(pf, res.point.z, config.tol);
    } catch (const NumericalError&) {
      ++set.failed;
      continue;
    }
    const bool seen = std::any_of(set.solutions.begin(), set.solutions.end(), [&](const FoundSolution& f) {
      return distance_mod(f.report.v0, report.v0, 4 * kPiSquared) < config.tol.dedupe;
    });
    if (seen) continue;
    set.solutions.push_back({res.point, report, gauge, s, res.max_residual});
  }
  set.geometric_index = geometric_index(set.solutions);
  return set;
}

std::vector<std::complex<double>> univariate_roots(const IntPoly& p) {
  if (p.degree() < 1) throw std::domain_error("univariate_roots: polynomial has no roots (degree < 1)");
  const int d = p.degree();
  const double lead = static_cast<double>(p.leading());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(p.coefficient(i)) / lead;
  const Eigen::VectorXcd eig = Eigen::EigenSolver<Eigen::MatrixXd>(companion, false).eigenvalues();

  const IntPoly dp = p.derivative();
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    std::complex<long double> x(eig(i).real(), eig(i).imag());
    for (int iter = 0; iter < 60; ++iter) {
      const std::complex<long double> slope = dp(x);
      if (slope == std::complex<long double>(0)) break;
      const std::complex<long double> step = p(x) / slope;
      x -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(x))) break;
    }
    roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.real() - b.real()) > 1e-9 * std::max(1.0, std::abs(a.real()))) return a.real() < b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

}  // namespace cvol
