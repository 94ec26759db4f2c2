#ifndef CURVETOP_BITSTREAM_HPP
#define CURVETOP_BITSTREAM_HPP

#include <functional>
#include <memory>
#include <vector>

#include "curvetop/upoly.hpp"

namespace curvetop {

// Polynomial with interval ("bitstream") coefficients: a coefficient oracle
// that, for any requested precision p, yields interval coefficients of width
// <= 2^-p each containing the exact limit coefficient. Materializations are
// forced to be nested by intersecting with the previous one.
//
// exact_sign, when present, gives the exact sign of the limit polynomial at a
// dyadic point; adaptive callers use it to settle values that interval
// evaluation alone cannot (exact roots of the limit polynomial).
class BitstreamPolynomial {
 public:
  using Oracle = std::function<std::vector<DyadicInterval>(long prec_bits)>;
  using ExactSignFn = std::function<int(const Dyadic&)>;

  BitstreamPolynomial(int degree, Oracle oracle, ExactSignFn exact_sign = nullptr);

  static BitstreamPolynomial from_exact(const UnivariatePolynomial& p);
  static BitstreamPolynomial from_rational(const std::vector<BigRat>& coeffs);

  int degree() const { return degree_; }

  // Interval coefficients, each of width <= 2^-prec_bits. Monotone: asking for
  // lower precision than already materialized returns the current state.
  const std::vector<DyadicInterval>& materialize(long prec_bits) const;
  long current_prec() const { return state_->prec; }
  const std::vector<DyadicInterval>& coeffs() const;

  bool has_exact_sign() const { return static_cast<bool>(exact_sign_); }
  int exact_sign(const Dyadic& x) const;

  // Evaluations against the current materialization.
  DyadicInterval eval_interval(const DyadicInterval& x) const;
  DyadicInterval eval_point(const Dyadic& x) const { return eval_interval(DyadicInterval::point(x)); }
  ComplexBox eval_complex(const ComplexDyadic& z) const;

  // Midpoints of the current interval coefficients.
  std::vector<Dyadic> median() const;

  // Stream for the quotient by (y - root), where root is an exact root of the
  // limit polynomial. Degree drops by one.
  BitstreamPolynomial deflate(const Dyadic& root) const;

 private:
  struct State {
    long prec = 0;
    std::vector<DyadicInterval> coeffs;
    bool materialized = false;
  };

  int degree_;
  Oracle oracle_;
  ExactSignFn exact_sign_;
  std::shared_ptr<State> state_;
};

}  // namespace curvetop

#endif  // CURVETOP_BITSTREAM_HPP
