#include "cvol/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cvol {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

IntPoly divide_content(const IntPoly& p, const BigInt& d) {
  std::vector<BigInt> c = p.coefficients();
  for (BigInt& x : c) x /= d;
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  for (long long x : coefficients) c_.emplace_back(x);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& x : c_) g = big_gcd(g, x);
  return abs(g);
}

IntPoly IntPoly::normalized() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  return divide_content(*this, g);
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long long>(k));
  return IntPoly(std::move(d));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigInt mag = abs(c_[k]);
    if (first) {
      if (c_[k] < 0) os << '-';
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  std::vector<BigInt> c = a.c_;
  for (BigInt& x : c) x *= s;
  return IntPoly(std::move(c));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  std::vector<BigInt> rem = a.coefficients();
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("exact_divide: divisor does not divide dividend");
  }
  std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const BigInt& top = rem[static_cast<size_t>(k + b.degree())];
    if (top % b.leading() != 0) throw std::domain_error("exact_divide: divisor does not divide dividend");
    const BigInt factor = top / b.leading();
    q[static_cast<size_t>(k)] = factor;
    for (size_t j = 0; j < bc.size(); ++j) rem[k + j] -= factor * bc[j];
  }
  for (const BigInt& x : rem)
    if (x != 0) throw std::domain_error("exact_divide: divisor does not divide dividend");
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by the zero polynomial");
  IntPoly r = a;
  const int db = b.degree();
  int steps = std::max(a.degree() - db + 1, 0);
  while (!r.is_zero() && r.degree() >= db) {
    const IntPoly term = IntPoly::monomial(r.leading(), r.degree() - db);
    r = b.leading() * r - term * b;
    --steps;
  }
  for (; steps > 0; --steps) r = b.leading() * r;
  return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.normalized();
  IntPoly y = b.normalized();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).normalized();
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

bool equal_up_to_sign(const IntPoly& a, const IntPoly& b) { return a == b || a == -b; }

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPoly{1};
    return;
  }
  const IntPoly g = gcd(num, den);
  num = exact_divide(num, g);
  den = exact_divide(den, g);
  BigInt c = big_gcd(num.content(), den.content());
  if (den.leading() < 0) c = -c;
  num_ = divide_content(num, c);
  den_ = divide_content(den, c);
}

std::string RationalFunction::to_string(char var) const {
  if (den_ == IntPoly{1}) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace cvol
