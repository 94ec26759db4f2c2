#include "curvetop/upoly.hpp"

#include <sstream>

namespace curvetop {

const BigInt& UnivariatePolynomial::leading() const {
  if (c_.empty()) throw Error("leading(): zero polynomial");
  return c_.back();
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  std::vector<BigInt> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const {
  if (is_zero() || o.is_zero()) return UnivariatePolynomial();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const BigInt& s) const {
  if (s == 0) return UnivariatePolynomial();
  std::vector<BigInt> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return UnivariatePolynomial();
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> r(c_.size() + static_cast<size_t>(k), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return UnivariatePolynomial(std::move(r));
}

BigInt UnivariatePolynomial::content() const {
  BigInt g(0);
  for (const BigInt& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UnivariatePolynomial UnivariatePolynomial::primitive_positive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  return divexact_scalar(g);
}

UnivariatePolynomial UnivariatePolynomial::divexact_scalar(const BigInt& s) const {
  if (s == 0) throw Error("divexact_scalar: zero divisor");
  std::vector<BigInt> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
    if (rem != 0) throw Error("divexact_scalar: inexact division");
    r[i] = q;
  }
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::divexact(const UnivariatePolynomial& d) const {
  if (d.is_zero()) throw Error("divexact: zero divisor");
  if (is_zero()) return UnivariatePolynomial();
  if (degree() < d.degree()) throw Error("divexact: inexact division (degree)");
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quo(c_.size() - d.c_.size() + 1, BigInt(0));
  const BigInt& lead = d.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
    if (rem[i] == 0) continue;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw Error("divexact: inexact division");
    quo[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw Error("divexact: nonzero remainder");
  return UnivariatePolynomial(std::move(quo));
}

UnivariatePolynomial UnivariatePolynomial::pseudo_rem(const UnivariatePolynomial& d) const {
  if (d.is_zero()) throw Error("pseudo_rem: zero divisor");
  if (is_zero() || degree() < d.degree()) return *this;
  // lc(d)^(delta+1) * p mod d, computed by delta+1 scale-and-eliminate steps.
  std::vector<BigInt> rem = c_;
  const BigInt& lead = d.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
    for (int j = 0; j < i; ++j) rem[j] *= lead;
    BigInt top = rem[i];
    rem[i] = 0;
    for (int j = 0; j < d.degree(); ++j) rem[i - d.degree() + j] -= top * d.c_[j];
  }
  return UnivariatePolynomial{std::vector<BigInt>(rem.begin(), rem.begin() + d.degree())};
}

BigRat UnivariatePolynomial::eval(const BigRat& x) const {
  BigRat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
  return acc;
}

BigInt UnivariatePolynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int UnivariatePolynomial::sign_at(const Dyadic& x) const { return sgn(eval(x.to_rational())); }

DyadicInterval UnivariatePolynomial::eval_interval(const DyadicInterval& x) const {
  DyadicInterval acc = DyadicInterval::point(Dyadic());
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + DyadicInterval::point(Dyadic(c_[i]));
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::taylor_shift(const BigInt& a) const {
  if (is_zero() || a == 0) return *this;
  // Synthetic Horner: repeatedly divide by (x - (-a)).
  std::vector<BigInt> c = c_;
  size_t n = c.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i >= k + 1; --i) c[i - 1] += a * c[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::reverse() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return UnivariatePolynomial(std::move(r));
}

long UnivariatePolynomial::cauchy_root_bound_log2() const {
  if (degree() < 1) throw Error("cauchy_root_bound_log2: need degree >= 1");
  // |z| < 1 + max|c_i| / |c_n|  <=  2^(1 + max bits(c_i) - (bits(c_n) - 1))
  long lead_bits = static_cast<long>(mpz_sizeinbase(c_.back().get_mpz_t(), 2));
  long max_bits = 0;
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long b = static_cast<long>(mpz_sizeinbase(c_[i].get_mpz_t(), 2));
    max_bits = std::max(max_bits, b);
  }
  long k = max_bits - (lead_bits - 1) + 1;
  return std::max(k, 1L);
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    BigInt mag = abs(a);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) {
      if (mag != 1) out << "*";
      out << var;
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace curvetop
