#pragma once

// Integer polynomials in one variable and quotients of them, exact over
// arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace cvol {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients in ascending degree; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);
  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(const BigInt& c, int degree);

  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const BigInt& leading() const { return c_.back(); }
  [[nodiscard]] BigInt coefficient(int k) const;

  /// gcd of the coefficients, non-negative.
  [[nodiscard]] BigInt content() const;
  /// Content 1, positive leading coefficient.
  [[nodiscard]] IntPoly normalized() const;

  [[nodiscard]] IntPoly derivative() const;
  template <typename Real>
  std::complex<Real> operator()(const std::complex<Real>& x) const {
    std::complex<Real> acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<Real>(*it);
    return acc;
  }

  [[nodiscard]] std::string to_string(char var = 't') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a) { return BigInt(-1) * a; }
  bool operator==(const IntPoly& other) const = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Quotient a / b when b divides a in Z[t]; throws std::domain_error otherwise.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Normalized gcd via the primitive polynomial remainder sequence; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Whether two polynomials agree up to an overall sign.
bool equal_up_to_sign(const IntPoly& a, const IntPoly& b);

/// num / den in lowest terms, den with positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction(IntPoly num, IntPoly den = IntPoly{1});
  static RationalFunction variable() { return RationalFunction(IntPoly{0, 1}); }

  [[nodiscard]] const IntPoly& num() const { return num_; }
  [[nodiscard]] const IntPoly& den() const { return den_; }

  template <typename Real>
  std::complex<Real> operator()(const std::complex<Real>& x) const {
    return num_(x) / den_(x);
  }

  [[nodiscard]] std::string to_string(char var = 't') const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& other) const = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

}  // namespace cvol
