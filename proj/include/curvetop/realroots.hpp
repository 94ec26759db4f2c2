#ifndef CURVETOP_REALROOTS_HPP
#define CURVETOP_REALROOTS_HPP

#include "curvetop/bitstream.hpp"
#include "curvetop/upoly.hpp"

namespace curvetop {

enum class Order { Less, Equal, Greater };

// A real algebraic number: square-free integer defining polynomial plus an
// open isolating interval with dyadic endpoints. Class invariants:
//   - the defining polynomial has exactly one root in the closed interval,
//     and neither endpoint is a root;
//   - the polynomial changes sign across the interval (roots are simple).
// refine() shrinks the representation, not the number; it is const but not
// thread-safe (callers synchronize, per the concurrency contract).
class AlgebraicNumber {
 public:
  AlgebraicNumber(UnivariatePolynomial defining, DyadicInterval iv);
  static AlgebraicNumber from_rational(const BigRat& q);

  const UnivariatePolynomial& poly() const { return poly_; }
  const DyadicInterval& interval() const { return iv_; }

  bool is_rational() const { return poly_.degree() == 1; }
  BigRat rational_value() const;

  void refine() const;  // halve the interval once
  void refine_below(const Dyadic& width) const;

  // Exact sign of g(alpha).
  int sign_of(const UnivariatePolynomial& g) const;

  Dyadic approx(long prec) const {
    refine_below(Dyadic::pow2(-prec));
    return iv_.mid();
  }

 private:
  UnivariatePolynomial poly_;
  mutable DyadicInterval iv_;
  mutable int sign_lo_;  // sign of poly_ at iv_.lo(); sign at hi() is -sign_lo_
};

Order compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
Order compare_to_rational(const AlgebraicNumber& a, const BigRat& q);

// Isolating intervals with rational-endpoint semantics for all real roots of a
// square-free integer polynomial, sorted ascending. Errors if gcd(p, p') is
// nonconstant.
std::vector<AlgebraicNumber> descartes_isolate(const UnivariatePolynomial& p);

// Same root, interval of width <= target.
AlgebraicNumber refine(const AlgebraicNumber& a, const Dyadic& target_width);

// Isolating interval of a k-fold root found by the system solver; the closed
// interval contains no other root of the fiber polynomial.
struct MultipleRootInterval {
  DyadicInterval interval;
  int multiplicity = 2;
  int source = -1;  // index of the originating system solution, if any
};

struct BitstreamBudget {
  long initial_prec = 64;
  long max_prec = 1L << 22;
  int max_cells = 200000;
};

// Bitstream Descartes, restricted to the ordinary (simple) roots. The
// intervals I_j of `multiples` must cover every multiple root of the limit
// polynomial (one root per interval, correct multiplicity k_j, closed
// intervals root-free apart from that root), pairwise disjoint. A leaf I is
// discarded when u(I) = 0, when I lies inside some I_j, or when I contains
// I_j's and u(I) <= sum k_j; it is accepted when l(I) = u(I) = 1 and I meets
// no I_j. Never certifies a multiple root; returns only the simple ones,
// sorted, each disjoint from every I_j.
std::vector<DyadicInterval> bitstream_isolate_simple(const BitstreamPolynomial& g,
                                                     const std::vector<MultipleRootInterval>& multiples,
                                                     const BitstreamBudget& budget = {});

// Bisection refinement of an interval produced by bitstream_isolate_simple.
DyadicInterval bitstream_refine_root(const BitstreamPolynomial& g, const DyadicInterval& iv,
                                     const Dyadic& target_width);

// min/max sign-variation counts of a sequence of interval coefficients.
std::pair<int, int> interval_sign_variations(const std::vector<DyadicInterval>& cs);

}  // namespace curvetop

#endif  // CURVETOP_REALROOTS_HPP
