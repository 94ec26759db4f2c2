#include "curvetop/bipoly.hpp"

#include <sstream>

namespace curvetop {

BivariatePolynomial::BivariatePolynomial(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  recompute_degrees();
}

void BivariatePolynomial::recompute_degrees() {
  deg_x_ = deg_y_ = -1;
  for (const auto& [e, c] : terms_) {
    deg_x_ = std::max(deg_x_, e.first);
    deg_y_ = std::max(deg_y_, e.second);
  }
  yview_valid_ = false;
}

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) {
  TermMap t;
  if (c != 0) t[{0, 0}] = c;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::variable(Var v) {
  TermMap t;
  t[v == Var::X ? std::make_pair(1, 0) : std::make_pair(0, 1)] = 1;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::from_univariate(const UnivariatePolynomial& p, Var v) {
  TermMap t;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    int d = static_cast<int>(i);
    t[v == Var::X ? std::make_pair(d, 0) : std::make_pair(0, d)] = p.coeffs()[i];
  }
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::from_y_coeffs(
    const std::vector<UnivariatePolynomial>& coeffs) {
  TermMap t;
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < coeffs[i].coeffs().size(); ++j)
      if (coeffs[i].coeffs()[j] != 0)
        t[{static_cast<int>(j), static_cast<int>(i)}] = coeffs[i].coeffs()[j];
  return BivariatePolynomial(std::move(t));
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

const BigInt& BivariatePolynomial::coeff(int dx, int dy) const {
  static const BigInt kZero(0);
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? kZero : it->second;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t[e] = -c;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  TermMap t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] += c;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  TermMap t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] -= c;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  TermMap t;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::operator*(const BigInt& s) const {
  TermMap t;
  if (s != 0)
    for (const auto& [e, c] : terms_) t[e] = c * s;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::swap_vars() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t[{e.second, e.first}] = c;
  return BivariatePolynomial(std::move(t));
}

const std::vector<UnivariatePolynomial>& BivariatePolynomial::y_coeffs() const {
  if (!yview_valid_) {
    yview_.assign(static_cast<size_t>(std::max(deg_y_, -1) + 1), UnivariatePolynomial());
    std::vector<std::vector<BigInt>> rows(yview_.size());
    for (const auto& [e, c] : terms_) {
      auto& row = rows[static_cast<size_t>(e.second)];
      if (row.size() <= static_cast<size_t>(e.first)) row.resize(e.first + 1, BigInt(0));
      row[static_cast<size_t>(e.first)] = c;
    }
    for (size_t i = 0; i < rows.size(); ++i) yview_[i] = UnivariatePolynomial(std::move(rows[i]));
    yview_valid_ = true;
  }
  return yview_;
}

const UnivariatePolynomial& BivariatePolynomial::leading_y_coeff() const {
  if (is_zero()) throw Error("leading_y_coeff: zero polynomial");
  return y_coeffs().back();
}

BigRat BivariatePolynomial::eval(const BigRat& x, const BigRat& y) const {
  BigRat acc(0);
  const auto& cs = y_coeffs();
  for (size_t i = cs.size(); i-- > 0;) acc = acc * y + cs[i].eval(x);
  return acc;
}

std::string BivariatePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest y-power first, then highest x-power.
  std::vector<std::pair<std::pair<int, int>, BigInt>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : ts) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = e.first > 0 || e.second > 0;
    bool printed = false;
    if (mag != 1 || !has_var) {
      out << mag.get_str();
      printed = true;
    }
    if (e.first > 0) {
      if (printed) out << "*";
      out << "x";
      if (e.first > 1) out << "^" << e.first;
      printed = true;
    }
    if (e.second > 0) {
      if (printed) out << "*";
      out << "y";
      if (e.second > 1) out << "^" << e.second;
    }
    first = false;
  }
  return out.str();
}

BivariatePolynomial derive(const BivariatePolynomial& p, Var var, int order) {
  if (order < 0) throw PreconditionError("derive: negative order");
  BivariatePolynomial cur = p;
  for (int k = 0; k < order; ++k) {
    BivariatePolynomial::TermMap t;
    for (const auto& [e, c] : cur.terms()) {
      int d = var == Var::X ? e.first : e.second;
      if (d == 0) continue;
      auto e2 = var == Var::X ? std::make_pair(e.first - 1, e.second)
                              : std::make_pair(e.first, e.second - 1);
      t[e2] = c * BigInt(d);
    }
    cur = BivariatePolynomial(std::move(t));
  }
  return cur;
}

UnivariatePolynomial content_y(const BivariatePolynomial& p) {
  if (p.is_zero()) throw PreconditionError("content_y: zero polynomial");
  UnivariatePolynomial g;
  for (const auto& fi : p.y_coeffs()) {
    if (fi.is_zero()) continue;
    g = g.is_zero() ? fi : gcd_univariate(g, fi);
    if (g.degree() == 0 && g.coeff(0) == 1) break;
  }
  return g.primitive_positive() * g.content();  // positive leading coefficient, full content
}

DyadicInterval eval_box(const BivariatePolynomial& p, const Box& b) {
  DyadicInterval acc = DyadicInterval::point(Dyadic());
  const auto& cs = p.y_coeffs();
  for (size_t i = cs.size(); i-- > 0;) acc = acc * b.y + cs[i].eval_interval(b.x);
  return acc;
}

SpecializedPolynomial specialize_x(const BivariatePolynomial& p, const BigRat& q) {
  const auto& cs = p.y_coeffs();
  std::vector<BigRat> vals(cs.size());
  BigInt den(1);
  for (size_t i = 0; i < cs.size(); ++i) {
    vals[i] = cs[i].eval(q);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), vals[i].get_den().get_mpz_t());
  }
  std::vector<BigInt> ints(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    BigRat v = vals[i] * BigRat(den);
    v.canonicalize();
    ints[i] = v.get_num();
  }
  UnivariatePolynomial poly{std::move(ints)};
  BigInt cont = poly.content();
  if (cont > 1) poly = poly.divexact_scalar(cont);
  BigRat scale(den, cont == 0 ? BigInt(1) : cont);
  scale.canonicalize();
  return {std::move(poly), scale};
}

SpecializedPolynomial specialize_y(const BivariatePolynomial& p, const BigRat& q) {
  return specialize_x(p.swap_vars(), q);
}

BivariatePolynomial divexact_univariate_x(const BivariatePolynomial& p,
                                          const UnivariatePolynomial& d) {
  if (d.is_zero()) throw Error("divexact_univariate_x: zero divisor");
  std::vector<UnivariatePolynomial> out;
  out.reserve(p.y_coeffs().size());
  for (const auto& fi : p.y_coeffs()) out.push_back(fi.is_zero() ? fi : fi.divexact(d));
  return BivariatePolynomial::from_y_coeffs(out);
}

BivariatePolynomial divexact(const BivariatePolynomial& p, const BivariatePolynomial& d) {
  if (d.is_zero()) throw Error("divexact: zero divisor");
  if (p.is_zero()) return p;
  if (d.degree_y() == 0) return divexact_univariate_x(p, d.y_coeffs()[0]);
  // Long division in y over Z[x]; every coefficient quotient must be exact.
  std::vector<UnivariatePolynomial> rem = p.y_coeffs();
  int dn = d.degree_y();
  const UnivariatePolynomial& dl = d.leading_y_coeff();
  if (p.degree_y() < dn) throw Error("divexact: inexact division (degree)");
  std::vector<UnivariatePolynomial> quo(p.degree_y() - dn + 1);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dn; --i) {
    if (rem[i].is_zero()) continue;
    UnivariatePolynomial q = rem[i].divexact(dl);
    quo[i - dn] = q;
    for (int j = 0; j <= dn; ++j) rem[i - dn + j] = rem[i - dn + j] - q * d.y_coeffs()[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw Error("divexact: nonzero remainder");
  return BivariatePolynomial::from_y_coeffs(quo);
}

}  // namespace curvetop
