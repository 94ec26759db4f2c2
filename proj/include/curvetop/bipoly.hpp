#ifndef CURVETOP_BIPOLY_HPP
#define CURVETOP_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "curvetop/upoly.hpp"

namespace curvetop {

enum class Var { X, Y };

// Result of substituting a rational for x: poly is integer and primitive in the
// sense that denominators were cleared; scale is the positive rational c with
// c * f(q, y) = poly (roots and signs of f(q, .) match poly up to scale).
struct SpecializedPolynomial {
  UnivariatePolynomial poly;
  BigRat scale;
};

// Sparse exponent-map polynomial in Z[x, y] with a dense y-view f(x,y) =
// sum_i f_i(x) y^i cached on demand. Immutable after construction.
class BivariatePolynomial {
 public:
  using TermMap = std::map<std::pair<int, int>, BigInt>;  // (deg_x, deg_y) -> coeff

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(TermMap terms);
  static BivariatePolynomial zero() { return BivariatePolynomial(); }
  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial variable(Var v);
  static BivariatePolynomial from_univariate(const UnivariatePolynomial& p, Var v);
  // Builds f(x,y) = sum_i coeffs[i](x) * y^i.
  static BivariatePolynomial from_y_coeffs(const std::vector<UnivariatePolynomial>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (deg_x_ == 0 && deg_y_ == 0); }
  int degree_x() const { return deg_x_; }
  int degree_y() const { return deg_y_; }
  int total_degree() const;
  const TermMap& terms() const { return terms_; }
  const BigInt& coeff(int dx, int dy) const;

  bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivariatePolynomial& o) const { return !(*this == o); }

  BivariatePolynomial operator-() const;
  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BigInt& s) const;

  BivariatePolynomial swap_vars() const;

  // Dense list of y-coefficients f_0(x), ..., f_{deg_y}(x).
  const std::vector<UnivariatePolynomial>& y_coeffs() const;
  const UnivariatePolynomial& leading_y_coeff() const;

  BigRat eval(const BigRat& x, const BigRat& y) const;

  std::string to_string() const;

 private:
  void recompute_degrees();

  TermMap terms_;
  int deg_x_ = -1;
  int deg_y_ = -1;
  mutable std::vector<UnivariatePolynomial> yview_;
  mutable bool yview_valid_ = false;
};

using BPoly = BivariatePolynomial;

// d^order/d(var)^order, exact; order 0 returns the input.
BivariatePolynomial derive(const BivariatePolynomial& p, Var var, int order);

// gcd over x of the y-coefficients f_i(x), positive leading coefficient.
// Errors on the zero polynomial.
UnivariatePolynomial content_y(const BivariatePolynomial& p);

// Interval range enclosure of p over the box (Horner in y then x, exact).
DyadicInterval eval_box(const BivariatePolynomial& p, const Box& b);

// Exact substitution x := q with denominators cleared.
SpecializedPolynomial specialize_x(const BivariatePolynomial& p, const BigRat& q);
// Exact substitution y := q with denominators cleared.
SpecializedPolynomial specialize_y(const BivariatePolynomial& p, const BigRat& q);

// Exact quotient p / d for a divisor in Z[x]; throws if inexact.
BivariatePolynomial divexact_univariate_x(const BivariatePolynomial& p,
                                          const UnivariatePolynomial& d);
// Exact quotient of bivariate polynomials; throws if inexact.
BivariatePolynomial divexact(const BivariatePolynomial& p, const BivariatePolynomial& d);

}  // namespace curvetop

#endif  // CURVETOP_BIPOLY_HPP
