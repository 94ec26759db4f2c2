#include "curvetop/interval.hpp"

namespace curvetop {

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::from_rational(const BigRat& q, long prec) {
  return DyadicInterval(Dyadic::from_rational(q, prec, RoundDir::Down),
                        Dyadic::from_rational(q, prec, RoundDir::Up));
}

DyadicInterval DyadicInterval::from_rational_pair(const BigRat& lo, const BigRat& hi, long prec) {
  return DyadicInterval(Dyadic::from_rational(lo, prec, RoundDir::Down),
                        Dyadic::from_rational(hi, prec, RoundDir::Up));
}

DyadicInterval DyadicInterval::from_rational_abs(const BigRat& q, long prec) {
  return DyadicInterval(Dyadic::from_rational_abs(q, prec + 1, RoundDir::Down),
                        Dyadic::from_rational_abs(q, prec + 1, RoundDir::Up));
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
  Dyadic p1 = lo_ * o.lo_, p2 = lo_ * o.hi_, p3 = hi_ * o.lo_, p4 = hi_ * o.hi_;
  Dyadic lo = p1, hi = p1;
  for (const Dyadic* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (*p > hi) hi = *p;
  }
  return DyadicInterval(lo, hi);
}

DyadicInterval DyadicInterval::square() const {
  Dyadic a = lo_ * lo_, b = hi_ * hi_;
  Dyadic hi = a >= b ? a : b;
  if (contains_zero()) return DyadicInterval(Dyadic(), hi);
  Dyadic lo = a <= b ? a : b;
  return DyadicInterval(lo, hi);
}

DyadicInterval DyadicInterval::div(const DyadicInterval& o, long prec) const {
  if (o.contains_zero()) throw Error("DyadicInterval::div: divisor contains zero");
  BigRat ql = lo_.to_rational(), qh = hi_.to_rational();
  BigRat ol = o.lo_.to_rational(), oh = o.hi_.to_rational();
  BigRat c[4] = {ql / ol, ql / oh, qh / ol, qh / oh};
  BigRat lo = c[0], hi = c[0];
  for (int i = 1; i < 4; ++i) {
    if (c[i] < lo) lo = c[i];
    if (c[i] > hi) hi = c[i];
  }
  return DyadicInterval(Dyadic::from_rational(lo, prec, RoundDir::Down),
                        Dyadic::from_rational(hi, prec, RoundDir::Up));
}

std::optional<DyadicInterval> DyadicInterval::intersect(const DyadicInterval& o) const {
  Dyadic lo = lo_ >= o.lo_ ? lo_ : o.lo_;
  Dyadic hi = hi_ <= o.hi_ ? hi_ : o.hi_;
  if (lo > hi) return std::nullopt;
  return DyadicInterval(lo, hi);
}

ComplexDyadic ComplexDyadic::div(const ComplexDyadic& o, long prec) const {
  Dyadic den = o.norm_sq();
  if (den.is_zero()) throw Error("ComplexDyadic::div: division by zero");
  ComplexDyadic num = *this * o.conj();
  return {num.re.div(den, prec, RoundDir::Down), num.im.div(den, prec, RoundDir::Down)};
}

ComplexBox ComplexBox::div(const ComplexBox& o, long prec) const {
  DyadicInterval den = o.norm_sq();
  if (den.contains_zero()) throw Error("ComplexBox::div: divisor may contain zero");
  ComplexBox num = *this * o.conj();
  return {num.re.div(den, prec), num.im.div(den, prec)};
}

}  // namespace curvetop
