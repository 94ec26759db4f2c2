#ifndef CURVETOP_INTERVAL_HPP
#define CURVETOP_INTERVAL_HPP

#include <optional>

#include "curvetop/numeric.hpp"

namespace curvetop {

// Closed interval [lo, hi] with exact dyadic endpoints. Plain +,-,* are exact;
// outward rounding is explicit (outward()/the prec-taking ops), so containment
// is never lost silently.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Dyadic lo, Dyadic hi);
  static DyadicInterval point(const Dyadic& v) { return DyadicInterval(v, v); }
  static DyadicInterval from_rational(const BigRat& q, long prec);
  static DyadicInterval from_rational_pair(const BigRat& lo, const BigRat& hi, long prec);
  // Enclosure with absolute width <= 2^-prec.
  static DyadicInterval from_rational_abs(const BigRat& q, long prec);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic mid() const { return Dyadic::midpoint(lo_, hi_); }

  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Dyadic& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const DyadicInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool strictly_contains(const DyadicInterval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }
  bool disjoint(const DyadicInterval& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }
  bool overlaps(const DyadicInterval& o) const { return !disjoint(o); }

  // -1/+1 when strictly negative/positive, 0 when the interval straddles zero.
  int sign() const {
    if (hi_.sign() < 0) return -1;
    if (lo_.sign() > 0) return 1;
    return 0;
  }

  DyadicInterval operator-() const { return DyadicInterval(-hi_, -lo_); }
  DyadicInterval operator+(const DyadicInterval& o) const {
    return DyadicInterval(lo_ + o.lo_, hi_ + o.hi_);
  }
  DyadicInterval operator-(const DyadicInterval& o) const { return *this + (-o); }
  DyadicInterval operator*(const DyadicInterval& o) const;
  DyadicInterval square() const;

  // Division; o must not contain zero.
  DyadicInterval div(const DyadicInterval& o, long prec) const;

  DyadicInterval outward(long prec) const {
    return DyadicInterval(lo_.round(prec, RoundDir::Down), hi_.round(prec, RoundDir::Up));
  }

  DyadicInterval hull(const DyadicInterval& o) const {
    return DyadicInterval(lo_ <= o.lo_ ? lo_ : o.lo_, hi_ >= o.hi_ ? hi_ : o.hi_);
  }
  std::optional<DyadicInterval> intersect(const DyadicInterval& o) const;

  // Upper bound on |value| over the interval.
  Dyadic abs_upper() const {
    Dyadic a = lo_.abs(), b = hi_.abs();
    return a >= b ? a : b;
  }
  // Lower bound on |value| (zero if the interval straddles zero).
  Dyadic abs_lower() const {
    if (contains_zero()) return Dyadic();
    Dyadic a = lo_.abs(), b = hi_.abs();
    return a <= b ? a : b;
  }

  std::string to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

 private:
  Dyadic lo_, hi_;
};

struct Box {
  DyadicInterval x;
  DyadicInterval y;
};

// Exact complex dyadic point.
struct ComplexDyadic {
  Dyadic re, im;

  ComplexDyadic() = default;
  ComplexDyadic(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const ComplexDyadic& o) const { return re == o.re && im == o.im; }

  ComplexDyadic operator-() const { return {-re, -im}; }
  ComplexDyadic operator+(const ComplexDyadic& o) const { return {re + o.re, im + o.im}; }
  ComplexDyadic operator-(const ComplexDyadic& o) const { return {re - o.re, im - o.im}; }
  ComplexDyadic operator*(const ComplexDyadic& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexDyadic conj() const { return {re, -im}; }
  Dyadic norm_sq() const { return re * re + im * im; }

  ComplexDyadic round(long prec) const {
    // Non-directed (representation) rounding; used by the numeric iteration only.
    return {re.round(prec, RoundDir::Down), im.round(prec, RoundDir::Down)};
  }
  // Rounded complex division (not rigorous); o must be nonzero.
  ComplexDyadic div(const ComplexDyadic& o, long prec) const;
};

// Axis-aligned complex rectangle with rigorous interval semantics.
struct ComplexBox {
  DyadicInterval re, im;

  ComplexBox() = default;
  ComplexBox(DyadicInterval r, DyadicInterval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexBox point(const ComplexDyadic& z) {
    return ComplexBox(DyadicInterval::point(z.re), DyadicInterval::point(z.im));
  }

  ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
  ComplexBox operator-(const ComplexBox& o) const { return {re - o.re, im - o.im}; }
  ComplexBox operator*(const ComplexBox& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexBox conj() const { return {re, -im}; }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

  DyadicInterval norm_sq() const { return re.square() + im.square(); }
  Dyadic abs_upper(long prec) const { return norm_sq().hi().sqrt(prec, RoundDir::Up); }
  Dyadic abs_lower(long prec) const {
    Dyadic lo = norm_sq().lo();
    if (lo.sign() <= 0) return Dyadic();
    return lo.sqrt(prec, RoundDir::Down);
  }

  // Rigorous division; o's norm interval must exclude zero.
  ComplexBox div(const ComplexBox& o, long prec) const;

  ComplexBox outward(long prec) const { return {re.outward(prec), im.outward(prec)}; }
};

}  // namespace curvetop

#endif  // CURVETOP_INTERVAL_HPP
