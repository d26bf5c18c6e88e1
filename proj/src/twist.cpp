#include "cvol/twist.hpp"

#include <stdexcept>

#include "cvol/diagram.hpp"

namespace cvol {

namespace {

RationalFunction constant(long long c) { return RationalFunction(IntPoly{c}); }

}  // namespace

TwistChain twist_chain(int n) {
  if (n < 1) throw std::invalid_argument("twist_chain: n must be >= 1");
  const RationalFunction t = RationalFunction::variable();
  TwistChain c;
  c.x.push_back(t);
  c.y.push_back(constant(1) + constant(2) / t);
  c.x.push_back(RationalFunction(IntPoly{0, 2, 1}, IntPoly{8, -4, 1}));
  c.y.push_back(constant(4) / t);
  for (int k = 1; k < n; ++k) {
    c.x.push_back(c.x[k] * c.y[k] / (c.x[k] + c.y[k] - c.x[k - 1]));
    c.y.push_back(c.x[k] + c.y[k] - c.x[k] * c.y[k] / c.y[k - 1]);
  }
  return c;
}

IntPoly twist_defining_polynomial(int n) {
  const TwistChain chain = twist_chain(n);
  const RationalFunction& yn = chain.y[n];
  IntPoly p = yn.num() * IntPoly{-4, 3} - IntPoly{0, 3} * yn.den();
  p = p.normalized();
  std::vector<IntPoly> denominators;
  for (int k = 0; k <= n; ++k) {
    denominators.push_back(chain.x[k].den());
    denominators.push_back(chain.y[k].den());
  }
  for (const IntPoly& d : denominators) {
    for (IntPoly g = gcd(p, d); g.degree() > 0; g = gcd(p, d)) p = exact_divide(p, g).normalized();
  }
  return p;
}

ComplexVector twist_point(int n, const TwistChain& chain, std::complex<double> t) {
  ComplexVector z(2 * n + 6);
  const std::complex<long double> tl(t.real(), t.imag());
  auto set = [&](int side, std::complex<long double> v) {
    z(side - 1) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  };
  set(1, 2.0L);
  set(2, -1.0L);
  for (int k = 0; k <= n; ++k) {
    set(3 + k, chain.x[k](tl));
    set(n + 5 + k, chain.y[k](tl));
  }
  set(n + 4, 3.0L);
  set(2 * n + 6, 1.0L);
  return z;
}

TwistResult twist_solutions(int n, const Tolerances& tol) {
  TwistResult out;
  out.n = n;
  out.polynomial = twist_defining_polynomial(n);
  const TwistChain chain = twist_chain(n);
  const PotentialFunction pf = build_potential(twist_knot_diagram(n));

  GaugeSpec gauge;
  gauge.pinned = {{1, 2.0}, {2, -1.0}, {2 * n + 6, 1.0}};
  gauge.dropped_equations.insert(2 * n + 6);
  NewtonOptions options;
  options.tol = tol;

  for (const std::complex<double> t : univariate_roots(out.polynomial)) {
    TwistRow row;
    row.t = t;
    ComplexVector z = twist_point(n, chain, t);
    double residual = h_residuals(pf, z).cwiseAbs().maxCoeff();
    if (!(residual < tol.solve)) {
      const NewtonResult res = newton(pf, gauge, z, options);
      if (res.status == NewtonStatus::Converged) {
        z = res.point.z;
        residual = res.max_residual;
        row.polished = true;
      }
    }
    row.verified = residual < tol.solve;
    row.solution.point.z = z;
    row.solution.point.essential = is_essential(pf, z, tol.essential);
    row.solution.gauge = gauge;
    row.solution.max_residual = residual;
    row.solution.report = eval_v0(pf, z, tol);
    row.solution.point.r = row.solution.report.r;
    out.rows.push_back(std::move(row));
  }

  std::vector<FoundSolution> found;
  for (const TwistRow& r : out.rows) found.push_back(r.solution);
  out.geometric_index = geometric_index(found);
  return out;
}

}  // namespace cvol
