#include "curvetop/bisolve.hpp"

#include <algorithm>

namespace curvetop {

namespace {

// ---- rational dense polynomials (coefficient arithmetic for Q(alpha)) ----

using QVec = std::vector<BigRat>;

void q_trim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec q_from(const UnivariatePolynomial& p) {
  QVec q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = BigRat(p.coeffs()[i]);
  return q;
}

QVec q_mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  q_trim(r);
  return r;
}

QVec q_sub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  q_trim(a);
  return a;
}

// Remainder of a by monic b.
QVec q_rem_monic(QVec a, const QVec& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    q_trim(a);
  }
  return a;
}

UnivariatePolynomial q_clear(const QVec& a) {
  BigInt den(1);
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    BigRat v = a[i] * BigRat(den);
    v.canonicalize();
    out[i] = v.get_num();
  }
  return UnivariatePolynomial(std::move(out));
}

// Quotient and remainder over Q; b nonzero.
std::pair<QVec, QVec> q_divmod(QVec a, const QVec& b) {
  QVec quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, BigRat(0));
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quo[off] = f;
    for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    q_trim(a);
  }
  return {quo, a};
}

// Extended gcd over Q: returns (g, s) with s*a = g (mod b), g monic or zero.
std::pair<QVec, QVec> q_extgcd(QVec a, QVec b) {
  QVec s0 = {BigRat(1)}, s1 = {};
  while (!b.empty()) {
    auto [quo, rem] = q_divmod(a, b);
    QVec s2 = q_sub(s0, q_mul(quo, s1));
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!a.empty()) {
    BigRat lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  return {a, s0};
}

// ---- dynamic evaluation in Q[x]/(modulus) at a designated root alpha ----

struct AlgebraicFiberField {
  const AlgebraicNumber& alpha;
  UnivariatePolynomial modulus_int;  // square-free, divides alpha's defining polynomial
  QVec modulus;                      // monic version

  explicit AlgebraicFiberField(const AlgebraicNumber& a) : alpha(a), modulus_int(a.poly()) {
    set_modulus(modulus_int);
  }

  void set_modulus(const UnivariatePolynomial& m) {
    modulus_int = m.primitive_positive();
    modulus = q_from(modulus_int);
    BigRat lead = modulus.back();
    for (auto& c : modulus) c /= lead;
  }

  QVec reduce(const QVec& u) const { return q_rem_monic(u, modulus); }

  // Does u(alpha) = 0? May split the modulus onto the branch containing alpha.
  bool is_zero(const QVec& u_in) {
    QVec u = reduce(u_in);
    if (u.empty()) return true;
    UnivariatePolynomial d = gcd_univariate(q_clear(u), modulus_int);
    if (d.degree() == 0) return false;
    if (d.degree() == modulus_int.degree()) return true;
    // Zero divisor: alpha lies on exactly one side of the split.
    int slo = d.sign_at(alpha.interval().lo().to_rational());
    int shi = d.sign_at(alpha.interval().hi().to_rational());
    if (slo * shi < 0) {
      set_modulus(d);
      return true;
    }
    set_modulus(modulus_int.divexact(d));
    return false;
  }

  QVec inverse(const QVec& u_in) {
    QVec u = reduce(u_in);
    auto [g, s] = q_extgcd(u, modulus);
    if (g.size() != 1)
      throw Error("AlgebraicFiberField: inverse of a zero divisor (is_zero not called?)");
    return reduce(s);
  }

  QVec mul(const QVec& a, const QVec& b) const { return reduce(q_mul(a, b)); }
};

// ---- polynomials in y over the fiber field ----

using FiberPoly = std::vector<QVec>;  // index = y-power

void normalize_degree(FiberPoly& p, AlgebraicFiberField& field) {
  while (!p.empty() && field.is_zero(p.back())) p.pop_back();
}

FiberPoly fiber_reduce(const BivariatePolynomial& f, const AlgebraicFiberField& field) {
  FiberPoly out;
  for (const auto& fi : f.y_coeffs()) out.push_back(field.reduce(q_from(fi)));
  return out;
}

void make_monic(FiberPoly& p, AlgebraicFiberField& field) {
  QVec inv = field.inverse(p.back());
  for (auto& c : p) c = field.mul(c, inv);
  p.back() = {BigRat(1)};
}

// Remainder of a by monic b (in y), coefficients reduced in the field.
FiberPoly fiber_rem(FiberPoly a, const FiberPoly& b, AlgebraicFiberField& field) {
  while (a.size() >= b.size()) {
    QVec top = a.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i)
      a[off + i] = field.reduce(q_sub(a[off + i], q_mul(top, b[i])));
    a.pop_back();
    normalize_degree(a, field);
  }
  return a;
}

FiberPoly fiber_derivative(const FiberPoly& p) {
  FiberPoly d;
  for (size_t i = 1; i < p.size(); ++i) {
    QVec c = p[i];
    for (auto& v : c) v *= BigRat(static_cast<long>(i));
    d.push_back(std::move(c));
  }
  return d;
}

FiberPoly fiber_gcd(FiberPoly a, FiberPoly b, AlgebraicFiberField& field) {
  normalize_degree(a, field);
  normalize_degree(b, field);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    make_monic(b, field);
    FiberPoly r = fiber_rem(a, b, field);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) make_monic(a, field);
  return a;
}

// Monic square-free polynomial over Q(alpha) whose roots are exactly the
// common roots of f(alpha, .) and g(alpha, .).
FiberPoly common_fiber_roots(const BivariatePolynomial& f, const BivariatePolynomial& g,
                             AlgebraicFiberField& field) {
  FiberPoly a = fiber_reduce(f, field);
  FiberPoly b = fiber_reduce(g, field);
  FiberPoly h = fiber_gcd(std::move(a), std::move(b), field);
  if (h.size() <= 1) return h;
  FiberPoly hd = fiber_gcd(h, fiber_derivative(h), field);
  if (hd.size() <= 1) return h;
  // Exact division h / hd (both monic; division is exact over the field).
  size_t m = hd.size() - 1;
  FiberPoly quo(h.size() - m);
  FiberPoly rem = h;
  for (size_t off = quo.size(); off-- > 0;) {
    QVec c = rem[off + m];
    quo[off] = c;
    for (size_t i = 0; i < m; ++i)
      rem[off + i] = field.reduce(q_sub(rem[off + i], q_mul(c, hd[i])));
  }
  return quo;
}

// Bitstream view of a monic fiber-field polynomial: coefficients u_j(alpha)
// materialized through interval evaluation over the shrinking I(alpha).
BitstreamPolynomial fiber_poly_stream(const FiberPoly& h, const AlgebraicNumber& alpha) {
  int deg = static_cast<int>(h.size()) - 1;
  std::vector<UnivariatePolynomial> cleared;
  std::vector<BigRat> scales;  // cleared = scale * u_j
  for (const auto& c : h) {
    UnivariatePolynomial p = q_clear(c);
    cleared.push_back(p);
    BigRat s(0);
    if (!c.empty()) {
      // recover the positive clearing factor: q_clear multiplies by lcm(dens)
      BigInt den(1);
      for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      s = BigRat(den);
    }
    scales.push_back(s);
  }
  AlgebraicNumber a = alpha;  // shares nothing; refined locally
  auto oracle = [cleared, scales, a, deg](long prec) {
    std::vector<DyadicInterval> out(static_cast<size_t>(deg) + 1);
    Dyadic mu = Dyadic::pow2(-prec);
    while (true) {
      bool ok = true;
      for (size_t i = 0; i <= static_cast<size_t>(deg); ++i) {
        if (cleared[i].is_zero()) {
          out[i] = DyadicInterval();
          continue;
        }
        DyadicInterval v = cleared[i].eval_interval(a.interval());
        // divide back by the clearing factor
        BigRat lo = v.lo().to_rational() / scales[i];
        BigRat hi = v.hi().to_rational() / scales[i];
        out[i] = DyadicInterval(Dyadic::from_rational_abs(lo, prec + 2, RoundDir::Down),
                                Dyadic::from_rational_abs(hi, prec + 2, RoundDir::Up));
        if (out[i].width() > mu) ok = false;
      }
      if (ok) return out;
      a.refine();
    }
  };
  std::vector<QVec> coeffs(h.begin(), h.end());
  AlgebraicNumber a2 = alpha;
  auto exact_sign = [coeffs, a2](const Dyadic& c) {
    BigRat cq = c.to_rational();
    QVec value;  // sum_j u_j * c^j as a rational polynomial in x
    BigRat power(1);
    for (const auto& u : coeffs) {
      if (value.size() < u.size()) value.resize(u.size(), BigRat(0));
      for (size_t i = 0; i < u.size(); ++i) value[i] += u[i] * power;
      power *= cq;
    }
    q_trim(value);
    if (value.empty()) return 0;
    return a2.sign_of(q_clear(value));
  };
  return BitstreamPolynomial(deg, std::move(oracle), std::move(exact_sign));
}

}  // namespace

std::vector<AlgebraicNumber> isolate_factored_roots(const SquareFreeFactorization& sf) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& f : sf.factors) {
    if (f.poly.degree() < 1) continue;
    for (auto& r : descartes_isolate(f.poly)) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
              return compare(a, b) == Order::Less;
            });
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    while (!roots[i].interval().disjoint(roots[i + 1].interval())) {
      roots[i].refine();
      roots[i + 1].refine();
    }
  return roots;
}

std::vector<SystemSolution> solve_system(const BivariatePolynomial& f,
                                         const BivariatePolynomial& g,
                                         const SolveSystemOptions& opts) {
  if (f.is_zero() && g.is_zero())
    throw PreconditionError("solve_system: both polynomials are zero");
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("solve_system: one input vanishes identically (common curve)");

  if (f.degree_y() == 0 && g.degree_y() == 0) {
    // Two curves of vertical lines: either disjoint or infinite overlap.
    UnivariatePolynomial a = f.y_coeffs()[0], b = g.y_coeffs()[0];
    UnivariatePolynomial d = gcd_univariate(a, b);
    if (d.degree() >= 1 && !descartes_isolate(square_free_part(d)).empty())
      throw PreconditionError("solve_system: infinitely many common solutions");
    return {};
  }

  UnivariatePolynomial rx_local;
  const UnivariatePolynomial* rx = opts.resultant_x;
  if (!rx) {
    rx_local = resultant(f, g, Var::Y);
    rx = &rx_local;
  }
  UnivariatePolynomial ry = resultant(f, g, Var::X);
  if (rx->is_zero() || ry.is_zero())
    throw PreconditionError("solve_system: nontrivial common factor (infinitely many solutions)");
  if (rx->degree() < 1) return {};

  std::vector<AlgebraicNumber> alphas = isolate_factored_roots(yun_squarefree(*rx));
  std::vector<AlgebraicNumber> betas;
  if (ry.degree() >= 1) betas = isolate_factored_roots(yun_squarefree(ry));

  std::vector<SystemSolution> out;
  for (const auto& alpha : alphas) {
    AlgebraicFiberField field(alpha);
    FiberPoly h = common_fiber_roots(f, g, field);
    if (h.size() <= 1) continue;  // no common root above alpha
    BitstreamPolynomial stream = fiber_poly_stream(h, alpha);
    std::vector<DyadicInterval> roots = bitstream_isolate_simple(stream, {});
    for (const auto& root_iv : roots) {
      // Match the root against the y-candidates to obtain integer defining data.
      DyadicInterval ri = root_iv;
      const AlgebraicNumber* match = nullptr;
      while (!match) {
        int last = -1, overlaps = 0;
        for (size_t bi = 0; bi < betas.size(); ++bi)
          if (!betas[bi].interval().disjoint(ri)) {
            ++overlaps;
            last = static_cast<int>(bi);
          }
        if (overlaps == 0) throw Error("solve_system: fiber root matches no y-candidate");
        if (overlaps == 1) {
          if (betas[static_cast<size_t>(last)].interval().contains(ri)) {
            match = &betas[static_cast<size_t>(last)];
            break;
          }
          // Unique candidate left: shrink the root interval into it.
          ri = bitstream_refine_root(stream, ri, ri.width().mul_pow2(-2));
          continue;
        }
        ri = bitstream_refine_root(stream, ri, ri.width().mul_pow2(-2));
        for (auto& b : betas)
          if (!b.interval().disjoint(ri)) b.refine();
      }
      AlgebraicNumber y = *match;
      y.refine_below(ri.width());
      SystemSolution sol{Box{alpha.interval(), y.interval()}, alpha, y};
      out.push_back(std::move(sol));
    }
  }
  std::sort(out.begin(), out.end(), [](const SystemSolution& a, const SystemSolution& b) {
    Order ox = compare(a.x, b.x);
    if (ox != Order::Equal) return ox == Order::Less;
    return compare(a.y, b.y) == Order::Less;
  });
  return out;
}

int sign_at_algebraic_point(const BivariatePolynomial& g, const AlgebraicNumber& alpha,
                            const AlgebraicNumber& beta) {
  if (g.is_zero()) return 0;
  AlgebraicNumber a = alpha, b = beta;
  for (int round = 0; round < 24; ++round) {
    DyadicInterval e = eval_box(g, Box{a.interval(), b.interval()});
    if (e.sign() != 0) return e.sign();
    a.refine();
    b.refine();
  }
  // Certify or exclude the zero exactly.
  AlgebraicFiberField field(a);
  FiberPoly gp = fiber_reduce(g, field);
  normalize_degree(gp, field);
  if (gp.empty()) return 0;  // g(alpha, y) vanishes identically
  FiberPoly qp;
  for (const BigInt& c : b.poly().coeffs()) qp.push_back(field.reduce(QVec{BigRat(c)}));
  normalize_degree(qp, field);
  FiberPoly d = fiber_gcd(gp, qp, field);
  bool is_common_root = false;
  if (d.size() > 1) {
    BitstreamPolynomial stream = fiber_poly_stream(d, a);
    for (DyadicInterval iv : bitstream_isolate_simple(stream, {})) {
      while (true) {
        if (iv.disjoint(b.interval())) break;
        if (b.interval().contains(iv)) {
          is_common_root = true;
          break;
        }
        iv = bitstream_refine_root(stream, iv, iv.width().mul_pow2(-2));
        b.refine();
      }
      if (is_common_root) break;
    }
  }
  if (is_common_root) return 0;
  while (true) {
    DyadicInterval e = eval_box(g, Box{a.interval(), b.interval()});
    if (e.sign() != 0) return e.sign();
    a.refine();
    b.refine();
  }
}

std::vector<SystemSolution> solutions_on_fiber(const std::vector<SystemSolution>& solutions,
                                               const AlgebraicNumber& alpha) {
  std::vector<SystemSolution> out;
  for (const auto& s : solutions)
    if (compare(s.x, alpha) == Order::Equal) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const SystemSolution& a, const SystemSolution& b) {
    return compare(a.y, b.y) == Order::Less;
  });
  return out;
}

}  // namespace curvetop
