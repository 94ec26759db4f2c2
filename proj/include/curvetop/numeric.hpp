#ifndef CURVETOP_NUMERIC_HPP
#define CURVETOP_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvetop {

using BigInt = mpz_class;
using BigRat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition of an operation does not hold (caller bug or bad input).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// An adaptive computation ran out of precision/iteration budget.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

enum class RoundDir { Down, Up };  // toward -inf / +inf

// Exact dyadic bigfloat m * 2^e. Mantissa is odd (or zero); no hidden rounding:
// add/sub/mul are closed, rounding happens only through the explicit round_*
// entry points.
class Dyadic {
 public:
  Dyadic() : man_(0), exp_(0) {}
  Dyadic(long v) : man_(v), exp_(0) { normalize(); }
  explicit Dyadic(const BigInt& m) : man_(m), exp_(0) { normalize(); }
  Dyadic(BigInt m, long e) : man_(std::move(m)), exp_(e) { normalize(); }

  static Dyadic from_double(double d);
  // Directed conversion; result has at most `prec` mantissa bits.
  static Dyadic from_rational(const BigRat& q, long prec, RoundDir dir);
  // Directed conversion onto the grid of multiples of 2^-prec (absolute error
  // below 2^-prec regardless of magnitude).
  static Dyadic from_rational_abs(const BigRat& q, long prec, RoundDir dir);
  static Dyadic pow2(long e) { return Dyadic(BigInt(1), e); }

  const BigInt& mantissa() const { return man_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sign() const { return sgn(man_); }

  Dyadic operator-() const { return Dyadic(-man_, exp_); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic mul_pow2(long e) const { return is_zero() ? *this : Dyadic(man_, exp_ + e); }

  int compare(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const { return man_ == o.man_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const { return compare(o) < 0; }
  bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
  bool operator>(const Dyadic& o) const { return compare(o) > 0; }
  bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

  Dyadic abs() const { return man_ < 0 ? -*this : *this; }

  // Keep at most `prec` mantissa bits, rounding in the given direction.
  Dyadic round(long prec, RoundDir dir) const;

  // Directed quotient with `prec` result bits. o must be nonzero.
  Dyadic div(const Dyadic& o, long prec, RoundDir dir) const;

  // Directed square root with `prec` result bits. Requires *this >= 0.
  Dyadic sqrt(long prec, RoundDir dir) const;

  BigRat to_rational() const;
  double to_double() const;

  // Smallest e with |value| < 2^e (value nonzero); log2 of a power of two is exact+1 here,
  // callers only need an upper bound.
  long log2_upper() const;

  size_t mantissa_bits() const { return man_ == 0 ? 0 : mpz_sizeinbase(man_.get_mpz_t(), 2); }

  static Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).mul_pow2(-1); }

  // Canonical exact form "m*2^e" ("0" for zero, plain "m" when e == 0).
  std::string to_string() const;
  // Decimal rendering with `digits` fractional digits, truncated toward zero.
  std::string to_decimal(size_t digits) const;

 private:
  void normalize();

  BigInt man_;
  long exp_;
};

}  // namespace curvetop

#endif  // CURVETOP_NUMERIC_HPP
