#ifndef CURVETOP_UPOLY_HPP
#define CURVETOP_UPOLY_HPP

#include <initializer_list>
#include <vector>

#include "curvetop/interval.hpp"
#include "curvetop/numeric.hpp"

namespace curvetop {

// Dense univariate polynomial over Z, coefficients low to high, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector and degree -1.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  UnivariatePolynomial(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

  static UnivariatePolynomial zero() { return UnivariatePolynomial(); }
  static UnivariatePolynomial constant(BigInt v) { return UnivariatePolynomial({std::move(v)}); }
  // c1*x + c0
  static UnivariatePolynomial linear(BigInt c0, BigInt c1) {
    return UnivariatePolynomial({std::move(c0), std::move(c1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const BigInt& coeff(size_t i) const {
    static const BigInt kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const UnivariatePolynomial& o) const { return !(*this == o); }

  UnivariatePolynomial operator-() const;
  UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator*(const BigInt& s) const;

  UnivariatePolynomial derivative() const;

  // x^k * p
  UnivariatePolynomial shift_up(int k) const;

  // Positive gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;
  // p / content, sign-normalized so the leading coefficient is positive.
  UnivariatePolynomial primitive_positive() const;

  // Exact division; throws if the division leaves a remainder.
  UnivariatePolynomial divexact(const UnivariatePolynomial& d) const;
  UnivariatePolynomial divexact_scalar(const BigInt& s) const;

  // Pseudo remainder: lc(d)^(deg p - deg d + 1) * p = q*d + r, returns r.
  UnivariatePolynomial pseudo_rem(const UnivariatePolynomial& d) const;

  BigRat eval(const BigRat& x) const;
  BigInt eval(const BigInt& x) const;
  int sign_at(const BigRat& x) const { return sgn(eval(x)); }
  int sign_at(const Dyadic& x) const;

  // Interval Horner; exact (endpoints are dyadics, ops are exact).
  DyadicInterval eval_interval(const DyadicInterval& x) const;

  // p(x + a), exact Taylor shift.
  UnivariatePolynomial taylor_shift(const BigInt& a) const;
  // Coefficient reversal x^deg * p(1/x) (drops trailing zeros of the result).
  UnivariatePolynomial reverse() const;

  // Power-of-two Cauchy bound: all complex roots have |z| < 2^k; returns k.
  // Requires p nonzero and nonconstant.
  long cauchy_root_bound_log2() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

using UPoly = UnivariatePolynomial;

// gcd helpers live in elim.hpp; declared here to keep upoly self-usable in tests.
UnivariatePolynomial gcd_univariate(const UnivariatePolynomial& p, const UnivariatePolynomial& q);

}  // namespace curvetop

#endif  // CURVETOP_UPOLY_HPP
