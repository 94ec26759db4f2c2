#include "curvetop/numeric.hpp"

#include <cmath>

namespace curvetop {

void Dyadic::normalize() {
  if (man_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long tz = mpz_scan1(man_.get_mpz_t(), 0);
  if (tz > 0) {
    man_ >>= tz;
    exp_ += static_cast<long>(tz);
  }
}

Dyadic Dyadic::from_double(double d) {
  if (d == 0.0) return Dyadic();
  if (!std::isfinite(d)) throw Error("Dyadic::from_double: non-finite input");
  int e = 0;
  double m = std::frexp(d, &e);  // d = m * 2^e, |m| in [0.5, 1)
  double scaled = std::ldexp(m, 53);
  BigInt man(static_cast<long>(scaled));
  return Dyadic(man, e - 53);
}

Dyadic Dyadic::from_rational(const BigRat& q, long prec, RoundDir dir) {
  if (q == 0) return Dyadic();
  if (prec < 1) prec = 1;
  const BigInt& n = q.get_num();
  const BigInt& d = q.get_den();
  long ln = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // Shift so the integer quotient carries ~prec significant bits.
  long k = prec - (ln - ld) + 1;
  BigInt num = n, den = d;
  if (k >= 0)
    num <<= k;
  else
    den <<= -k;
  BigInt quo;
  if (dir == RoundDir::Down)
    mpz_fdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_cdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(quo, -k);
}

Dyadic Dyadic::from_rational_abs(const BigRat& q, long prec, RoundDir dir) {
  if (q == 0) return Dyadic();
  BigInt num = q.get_num(), den = q.get_den();
  if (prec >= 0)
    num <<= static_cast<unsigned long>(prec);
  else
    den <<= static_cast<unsigned long>(-prec);
  BigInt quo;
  if (dir == RoundDir::Down)
    mpz_fdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_cdiv_q(quo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(quo, -prec);
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long e = std::min(exp_, o.exp_);
  BigInt a = man_ << static_cast<unsigned long>(exp_ - e);
  BigInt b = o.man_ << static_cast<unsigned long>(o.exp_ - e);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (is_zero() || o.is_zero()) return Dyadic();
  return Dyadic(man_ * o.man_, exp_ + o.exp_);
}

int Dyadic::compare(const Dyadic& o) const {
  int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  long e = std::min(exp_, o.exp_);
  BigInt a = man_ << static_cast<unsigned long>(exp_ - e);
  BigInt b = o.man_ << static_cast<unsigned long>(o.exp_ - e);
  return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0);
}

Dyadic Dyadic::round(long prec, RoundDir dir) const {
  if (is_zero()) return *this;
  if (prec < 1) prec = 1;
  long bits = static_cast<long>(mantissa_bits());
  if (bits <= prec) return *this;
  unsigned long shift = static_cast<unsigned long>(bits - prec);
  BigInt q;
  if (dir == RoundDir::Down)
    mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
  else
    mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
  return Dyadic(q, exp_ + static_cast<long>(shift));
}

Dyadic Dyadic::div(const Dyadic& o, long prec, RoundDir dir) const {
  if (o.is_zero()) throw Error("Dyadic::div: division by zero");
  if (is_zero()) return Dyadic();
  BigRat q(to_rational() / o.to_rational());
  q.canonicalize();
  return from_rational(q, prec, dir);
}

Dyadic Dyadic::sqrt(long prec, RoundDir dir) const {
  if (sign() < 0) throw Error("Dyadic::sqrt: negative input");
  if (is_zero()) return Dyadic();
  if (prec < 1) prec = 1;
  // Scale to an integer m * 2^(2s) so the integer sqrt carries >= prec bits.
  long bits = static_cast<long>(mantissa_bits());
  long extra = 2 * prec - bits + 2;
  if (extra < 0) extra = 0;
  if ((exp_ - extra) % 2 != 0) extra += 1;
  BigInt scaled = man_ << static_cast<unsigned long>(extra);
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  if (dir == RoundDir::Up && rem != 0) root += 1;
  return Dyadic(root, (exp_ - extra) / 2).round(prec, dir);
}

BigRat Dyadic::to_rational() const {
  BigRat r(man_);
  if (exp_ >= 0) {
    BigInt num = man_ << static_cast<unsigned long>(exp_);
    r = BigRat(num);
  } else {
    BigInt den(1);
    den <<= static_cast<unsigned long>(-exp_);
    r = BigRat(man_, den);
  }
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  BigRat r = to_rational();
  return r.get_d();
}

long Dyadic::log2_upper() const {
  if (is_zero()) throw Error("Dyadic::log2_upper: zero");
  return static_cast<long>(mantissa_bits()) + exp_;
}

std::string Dyadic::to_string() const {
  if (is_zero()) return "0";
  if (exp_ == 0) return man_.get_str();
  return man_.get_str() + "*2^" + std::to_string(exp_);
}

std::string Dyadic::to_decimal(size_t digits) const {
  if (is_zero()) return "0";
  BigInt num = man_ < 0 ? BigInt(-man_) : man_;
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  num *= pow10;
  if (exp_ >= 0)
    num <<= static_cast<unsigned long>(exp_);
  else
    num >>= static_cast<unsigned long>(-exp_);  // truncation toward zero (num > 0)
  std::string s = num.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (man_ < 0) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    std::string frac = s.substr(s.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

}  // namespace curvetop
