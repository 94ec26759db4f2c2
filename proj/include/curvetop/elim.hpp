#ifndef CURVETOP_ELIM_HPP
#define CURVETOP_ELIM_HPP

#include "curvetop/bipoly.hpp"

namespace curvetop {

class AlgebraicNumber;

// R = unit * prod_i factor_i ^ multiplicity_i with square-free, pairwise
// coprime, primitive, positive-leading factors. Factors with r_i == 1 are not
// stored; multiplicities are strictly increasing.
struct SquareFreeFactorization {
  struct Factor {
    UnivariatePolynomial poly;
    int multiplicity;
  };
  std::vector<Factor> factors;
  BigInt unit;

  UnivariatePolynomial reconstruct() const;
};

// Exact resultant eliminating `var`, via the subresultant polynomial remainder
// sequence over Z[x] (content-stripped). Conventions:
//   - both inputs zero: error;
//   - exactly one input zero: zero polynomial;
//   - both of degree 0 in `var`: constant 1 (empty Sylvester matrix);
//   - q of degree 0, p of degree n >= 1: q^n (and symmetrically).
UnivariatePolynomial resultant(const BivariatePolynomial& p, const BivariatePolynomial& q,
                               Var eliminated);

// Yun square-free factorization; errors on the zero polynomial.
SquareFreeFactorization yun_squarefree(const UnivariatePolynomial& p);

// Multiplicity of `a` as a root of the factored polynomial: i if a is a root
// of the multiplicity-i factor (decided by gcd + endpoint signs), else 0.
int multiplicity_at(const SquareFreeFactorization& sf, const AlgebraicNumber& a);

// gcd in Z[x,y], primitive in y and content-normalized; exact divisor of both
// inputs up to an integer constant.
BivariatePolynomial gcd_bivariate(const BivariatePolynomial& f, const BivariatePolynomial& g);

// p / gcd(p, p'), primitive with positive leading coefficient.
UnivariatePolynomial square_free_part(const UnivariatePolynomial& p);

}  // namespace curvetop

#endif  // CURVETOP_ELIM_HPP
