#include "curvetop/elim.hpp"

#include "curvetop/realroots.hpp"

namespace curvetop {

namespace {

UnivariatePolynomial upow(const UnivariatePolynomial& p, int k) {
  UnivariatePolynomial r = UnivariatePolynomial::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

// ---- polynomials in y with coefficients in Z[x] ----

using YView = std::vector<UnivariatePolynomial>;

int yv_degree(const YView& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void yv_trim(YView& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UnivariatePolynomial yv_content(const YView& a) {
  UnivariatePolynomial g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_univariate(g, c);
  }
  // Full content including the integer part, positive leading coefficient.
  if (g.is_zero()) return g;
  BigInt ic(0);
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    BigInt cc = c.content();
    mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), cc.get_mpz_t());
  }
  return g.primitive_positive() * ic;
}

YView yv_divexact_scalar(const YView& a, const UnivariatePolynomial& s) {
  YView r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].is_zero() ? a[i] : a[i].divexact(s);
  return r;
}

// Pseudo remainder in y: lc_y(d)^(deg a - deg d + 1) * a mod d.
YView yv_prem(const YView& a, const YView& d) {
  int da = yv_degree(a), dd = yv_degree(d);
  if (dd < 0) throw Error("yv_prem: zero divisor");
  if (da < dd) return a;
  YView rem = a;
  rem.resize(static_cast<size_t>(da) + 1);
  const UnivariatePolynomial& lead = d[static_cast<size_t>(dd)];
  for (int i = da; i >= dd; --i) {
    for (int j = 0; j < i; ++j) rem[j] = rem[j] * lead;
    UnivariatePolynomial top = rem[i];
    rem[i] = UnivariatePolynomial();
    if (!top.is_zero())
      for (int j = 0; j < dd; ++j) rem[i - dd + j] = rem[i - dd + j] - top * d[j];
  }
  rem.resize(static_cast<size_t>(dd));
  yv_trim(rem);
  return rem;
}

}  // namespace

UnivariatePolynomial SquareFreeFactorization::reconstruct() const {
  UnivariatePolynomial r = UnivariatePolynomial::constant(unit);
  for (const auto& f : factors) r = r * upow(f.poly, f.multiplicity);
  return r;
}

UnivariatePolynomial gcd_univariate(const UnivariatePolynomial& p, const UnivariatePolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd_univariate: both inputs zero");
  if (p.is_zero()) return q.primitive_positive();
  if (q.is_zero()) return p.primitive_positive();
  UnivariatePolynomial a = p.primitive_positive();
  UnivariatePolynomial b = q.primitive_positive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UnivariatePolynomial r = a.pseudo_rem(b).primitive_positive();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UnivariatePolynomial resultant(const BivariatePolynomial& p, const BivariatePolynomial& q,
                               Var eliminated) {
  if (eliminated == Var::X) return resultant(p.swap_vars(), q.swap_vars(), Var::Y);
  if (p.is_zero() && q.is_zero())
    throw PreconditionError("resultant: both inputs identically zero");
  if (p.is_zero() || q.is_zero()) return UnivariatePolynomial();
  int n = p.degree_y(), m = q.degree_y();
  if (n == 0 && m == 0) return UnivariatePolynomial::constant(1);
  if (m == 0) return upow(q.y_coeffs()[0], n);
  if (n == 0) return upow(p.y_coeffs()[0], m);

  YView a = p.y_coeffs(), b = q.y_coeffs();
  int sign = 1;
  if (n < m) {
    std::swap(a, b);
    if ((n & 1) && (m & 1)) sign = -1;
  }
  UnivariatePolynomial ca = yv_content(a), cb = yv_content(b);
  a = yv_divexact_scalar(a, ca);
  b = yv_divexact_scalar(b, cb);
  UnivariatePolynomial scale = upow(ca, yv_degree(b)) * upow(cb, yv_degree(a));

  UnivariatePolynomial g = UnivariatePolynomial::constant(1);
  UnivariatePolynomial h = UnivariatePolynomial::constant(1);
  while (true) {
    int da = yv_degree(a), db = yv_degree(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;  // res(A,B) = (-1)^(deg A deg B) res(B,A)
    YView r = yv_prem(a, b);
    if (yv_degree(r) < 0 && db > 0) return UnivariatePolynomial();  // positive-degree common factor
    a = std::move(b);
    b = yv_divexact_scalar(r, g * upow(h, delta));
    g = a[static_cast<size_t>(yv_degree(a))];
    if (delta > 0) h = upow(g, delta).divexact(upow(h, delta - 1));
    if (yv_degree(b) <= 0) break;
  }
  int d = yv_degree(a);
  UnivariatePolynomial res = upow(b[0], d).divexact(upow(h, d - 1));
  res = scale * res;
  if (sign < 0) res = -res;
  return res;
}

SquareFreeFactorization yun_squarefree(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw PreconditionError("yun_squarefree: zero polynomial");
  SquareFreeFactorization out;
  UnivariatePolynomial P = p.primitive_positive();
  BigInt unit = p.content();
  if (p.leading() < 0) unit = -unit;
  out.unit = unit;
  if (P.degree() == 0) return out;

  UnivariatePolynomial dP = P.derivative();
  UnivariatePolynomial g = gcd_univariate(P, dP);
  if (g.degree() == 0) {
    out.factors.push_back({P, 1});
    return out;
  }
  UnivariatePolynomial v = P.divexact(g);
  UnivariatePolynomial w = dP.divexact(g);
  int k = 1;
  while (v.degree() > 0) {
    UnivariatePolynomial z = w - v.derivative();
    UnivariatePolynomial hk = z.is_zero() ? v : gcd_univariate(v, z);
    if (hk.degree() > 0) out.factors.push_back({hk, k});
    v = v.divexact(hk);
    w = z.is_zero() ? z : z.divexact(hk);
    ++k;
  }
  return out;
}

int multiplicity_at(const SquareFreeFactorization& sf, const AlgebraicNumber& a) {
  for (const auto& f : sf.factors) {
    UnivariatePolynomial g = gcd_univariate(f.poly, a.poly());
    if (g.degree() < 1) continue;
    int slo = g.sign_at(a.interval().lo().to_rational());
    int shi = g.sign_at(a.interval().hi().to_rational());
    if (slo * shi < 0) return f.multiplicity;
  }
  return 0;
}

BivariatePolynomial gcd_bivariate(const BivariatePolynomial& f, const BivariatePolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd_bivariate: both inputs zero");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  UnivariatePolynomial cf = content_y(f), cg = content_y(g);
  YView a = divexact_univariate_x(f, cf).y_coeffs();
  YView b = divexact_univariate_x(g, cg).y_coeffs();
  if (yv_degree(a) < yv_degree(b)) std::swap(a, b);
  while (yv_degree(b) >= 0) {
    YView r = yv_prem(a, b);
    UnivariatePolynomial c = yv_content(r);
    a = std::move(b);
    b = c.is_zero() ? YView{} : yv_divexact_scalar(r, c);
  }
  UnivariatePolynomial ca = yv_content(a);
  YView pp = yv_divexact_scalar(a, ca);
  BivariatePolynomial result =
      BivariatePolynomial::from_y_coeffs(pp) *
      BivariatePolynomial::from_univariate(gcd_univariate(cf, cg), Var::X);
  // Sign-normalize: make the leading (y, then x) coefficient positive.
  int dy = result.degree_y();
  const UnivariatePolynomial& lead = result.y_coeffs()[static_cast<size_t>(dy)];
  if (lead.leading() < 0) result = -result;
  return result;
}

UnivariatePolynomial square_free_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw PreconditionError("square_free_part: zero polynomial");
  UnivariatePolynomial P = p.primitive_positive();
  if (P.degree() == 0) return P;
  UnivariatePolynomial g = gcd_univariate(P, P.derivative());
  return g.degree() == 0 ? P : P.divexact(g).primitive_positive();
}

}  // namespace curvetop
