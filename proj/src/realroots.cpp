#include "curvetop/realroots.hpp"

#include <algorithm>
#include <deque>

#include "curvetop/elim.hpp"

namespace curvetop {

namespace {

using QVec = std::vector<BigRat>;

QVec to_qvec(const UnivariatePolynomial& p) {
  QVec q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = BigRat(p.coeffs()[i]);
  return q;
}

// Coefficients of p(a + w*t).
QVec compose_affine(const QVec& p, const BigRat& a, const BigRat& w) {
  QVec acc;
  for (size_t i = p.size(); i-- > 0;) {
    QVec nxt(acc.size() + 1, BigRat(0));
    for (size_t j = 0; j < acc.size(); ++j) {
      nxt[j] += acc[j] * a;
      nxt[j + 1] += acc[j] * w;
    }
    nxt[0] += p[i];
    acc = std::move(nxt);
    while (acc.size() > p.size()) acc.pop_back();
  }
  acc.resize(p.size(), BigRat(0));
  return acc;
}

int count_variations(const QVec& c) {
  int v = 0, last = 0;
  for (const auto& q : c) {
    int s = sgn(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Sign variations of (1+t)^n q(1/(1+t)) for q(t) = p(a + (b-a)t): Descartes
// test for the open interval (a, b).
int descartes_variations(const UnivariatePolynomial& p, const Dyadic& a, const Dyadic& b) {
  QVec q = compose_affine(to_qvec(p), a.to_rational(), (b - a).to_rational());
  std::reverse(q.begin(), q.end());
  size_t n = q.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i >= k + 1; --i) q[i - 1] += q[i];
  return count_variations(q);
}

// Primitive integer linear polynomial with root m.
UnivariatePolynomial linear_with_root(const Dyadic& m) {
  if (m.exponent() >= 0) {
    BigInt r = m.mantissa() << static_cast<unsigned long>(m.exponent());
    return UnivariatePolynomial{-r, BigInt(1)};
  }
  BigInt den(1);
  den <<= static_cast<unsigned long>(-m.exponent());
  return UnivariatePolynomial{-m.mantissa(), den};
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber::AlgebraicNumber(UnivariatePolynomial defining, DyadicInterval iv)
    : poly_(std::move(defining)), iv_(std::move(iv)) {
  if (poly_.degree() < 1) throw PreconditionError("AlgebraicNumber: constant defining polynomial");
  sign_lo_ = poly_.sign_at(iv_.lo().to_rational());
  int shi = poly_.sign_at(iv_.hi().to_rational());
  if (sign_lo_ == 0 || shi == 0)
    throw PreconditionError("AlgebraicNumber: interval endpoint is a root");
  if (sign_lo_ == shi)
    throw PreconditionError("AlgebraicNumber: no sign change across the interval");
}

AlgebraicNumber AlgebraicNumber::from_rational(const BigRat& q) {
  UnivariatePolynomial p{-q.get_num(), q.get_den()};
  Dyadic lo = Dyadic::from_rational_abs(q, 1, RoundDir::Down) - Dyadic(1);
  Dyadic hi = Dyadic::from_rational_abs(q, 1, RoundDir::Up) + Dyadic(1);
  return AlgebraicNumber(std::move(p), DyadicInterval(lo, hi));
}

BigRat AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error("rational_value: degree > 1");
  BigRat q(-poly_.coeff(0), poly_.coeff(1));
  q.canonicalize();
  return q;
}

void AlgebraicNumber::refine() const {
  Dyadic m = iv_.mid();
  int s = poly_.sign_at(m.to_rational());
  if (s == 0) {
    // The root is exactly m; keep a quarter-width neighborhood.
    Dyadic w = iv_.width().mul_pow2(-3);
    iv_ = DyadicInterval(m - w, m + w);
    return;
  }
  iv_ = (s == sign_lo_) ? DyadicInterval(m, iv_.hi()) : DyadicInterval(iv_.lo(), m);
}

void AlgebraicNumber::refine_below(const Dyadic& width) const {
  while (iv_.width() > width) refine();
}

int AlgebraicNumber::sign_of(const UnivariatePolynomial& g) const {
  if (g.is_zero()) return 0;
  if (!g.is_constant()) {
    UnivariatePolynomial d = gcd_univariate(g, poly_);
    if (d.degree() >= 1) {
      int slo = d.sign_at(iv_.lo().to_rational());
      int shi = d.sign_at(iv_.hi().to_rational());
      if (slo * shi < 0) return 0;
    }
  }
  while (true) {
    DyadicInterval e = g.eval_interval(iv_);
    int s = e.sign();
    if (s != 0) return s;
    refine();
  }
}

Order compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  UnivariatePolynomial g =
      (a.poly() == b.poly()) ? a.poly() : gcd_univariate(a.poly(), b.poly());
  bool maybe_equal = g.degree() >= 1;
  while (true) {
    if (a.interval().hi() <= b.interval().lo()) return Order::Less;
    if (b.interval().hi() <= a.interval().lo()) return Order::Greater;
    if (maybe_equal) {
      Dyadic jlo = std::max(a.interval().lo(), b.interval().lo());
      Dyadic jhi = std::min(a.interval().hi(), b.interval().hi());
      int slo = g.sign_at(jlo.to_rational());
      int shi = g.sign_at(jhi.to_rational());
      if (slo * shi < 0) return Order::Equal;
    }
    a.refine();
    b.refine();
  }
}

Order compare_to_rational(const AlgebraicNumber& a, const BigRat& q) {
  while (true) {
    BigRat lo = a.interval().lo().to_rational(), hi = a.interval().hi().to_rational();
    if (q <= lo) return Order::Greater;
    if (q >= hi) return Order::Less;
    if (a.poly().eval(q) == 0) return Order::Equal;
    a.refine();
  }
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Dyadic& target_width) {
  AlgebraicNumber out = a;
  out.refine_below(target_width);
  return out;
}

// ---------------------------------------------------------------------------
// Descartes isolation for exact square-free integer polynomials

namespace {

struct DescartesState {
  UnivariatePolynomial full;     // the square-free input (primitive)
  UnivariatePolynomial working;  // full with discovered dyadic roots divided out
  std::vector<Dyadic> exact_roots;

  // Sign of the working polynomial; records and deflates exact roots.
  int probe(const Dyadic& m) {
    int s = working.sign_at(m.to_rational());
    if (s == 0) {
      exact_roots.push_back(m);
      working = working.divexact(linear_with_root(m)).primitive_positive();
    }
    return s;
  }
};

}  // namespace

std::vector<AlgebraicNumber> descartes_isolate(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw PreconditionError("descartes_isolate: zero polynomial");
  {
    UnivariatePolynomial d = p.derivative();
    if (!d.is_zero() && gcd_univariate(p, d).degree() >= 1)
      throw PreconditionError("descartes_isolate: input is not square-free");
  }
  DescartesState st;
  st.full = p.primitive_positive();
  st.working = st.full;
  if (st.full.degree() < 1) return {};

  long k = st.full.cauchy_root_bound_log2();
  Dyadic bound = Dyadic::pow2(k);
  std::deque<std::pair<Dyadic, Dyadic>> cells;
  cells.emplace_back(-bound, bound);
  std::vector<std::pair<Dyadic, Dyadic>> accepted;

  while (!cells.empty()) {
    auto [a, b] = cells.front();
    cells.pop_front();
    if (st.working.degree() < 1) break;
    int v = descartes_variations(st.working, a, b);
    if (v == 0) continue;
    if (v == 1) {
      accepted.emplace_back(a, b);
      continue;
    }
    Dyadic m = Dyadic::midpoint(a, b);
    st.probe(m);
    cells.emplace_back(a, m);
    cells.emplace_back(m, b);
  }

  std::vector<AlgebraicNumber> out;

  // Accepted cells: exactly one root of the then-current working polynomial in
  // the open cell; endpoints may coincide with previously found exact roots,
  // in which case the cell is pulled off them.
  for (auto [a, b] : accepted) {
    bool became_exact = false;
    while (st.full.sign_at(a.to_rational()) == 0) {
      Dyadic t = Dyadic::midpoint(a, b);
      int s = st.probe(t);
      if (s == 0) {
        became_exact = true;  // the cell's root itself is dyadic
        break;
      }
      if (s == st.working.sign_at(b.to_rational()))
        b = t;  // root in (a, t): shrink from the right, keep hunting
      else
        a = t;
    }
    if (became_exact) continue;
    while (st.full.sign_at(b.to_rational()) == 0) {
      Dyadic t = Dyadic::midpoint(a, b);
      int s = st.probe(t);
      if (s == 0) {
        became_exact = true;
        break;
      }
      if (s == st.working.sign_at(a.to_rational()))
        a = t;
      else
        b = t;
    }
    if (became_exact) continue;
    out.emplace_back(st.full, DyadicInterval(a, b));
  }

  // Exact dyadic roots: shrink a symmetric interval until the deflated
  // polynomial is variation-free on it and the endpoints are off all roots.
  for (const Dyadic& m : st.exact_roots) {
    Dyadic w = Dyadic::pow2(-2);
    while (true) {
      Dyadic lo = m - w, hi = m + w;
      bool clean = st.full.sign_at(lo.to_rational()) != 0 &&
                   st.full.sign_at(hi.to_rational()) != 0 &&
                   (st.working.degree() < 1 || descartes_variations(st.working, lo, hi) == 0);
      if (clean) {
        bool clear_of_others = true;
        for (const Dyadic& m2 : st.exact_roots)
          if (!(m2 == m) && lo <= m2 && m2 <= hi) clear_of_others = false;
        if (clear_of_others) break;
      }
      w = w.mul_pow2(-1);
    }
    out.emplace_back(st.full, DyadicInterval(m - w, m + w));
  }

  std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) {
    return compare(x, y) == Order::Less;
  });
  // Overlaps can remain between an exact-root interval and a neighboring cell;
  // refine until strictly disjoint.
  for (size_t i = 0; i + 1 < out.size(); ++i)
    while (!out[i].interval().disjoint(out[i + 1].interval())) {
      out[i].refine();
      out[i + 1].refine();
    }
  return out;
}

// ---------------------------------------------------------------------------
// Bitstream Descartes (simple roots only)

namespace {

// Transformed interval coefficients for the Descartes test on (a, b).
std::vector<DyadicInterval> bdc_transform(const std::vector<DyadicInterval>& cs, const Dyadic& a,
                                          const Dyadic& b, long round_prec) {
  DyadicInterval A = DyadicInterval::point(a);
  DyadicInterval W = DyadicInterval::point(b - a);
  std::vector<DyadicInterval> acc;
  for (size_t i = cs.size(); i-- > 0;) {
    std::vector<DyadicInterval> nxt(acc.size() + 1, DyadicInterval());
    for (size_t j = 0; j < acc.size(); ++j) {
      nxt[j] = nxt[j] + acc[j] * A;
      nxt[j + 1] = nxt[j + 1] + acc[j] * W;
    }
    nxt[0] = nxt[0] + cs[i];
    if (nxt.size() > cs.size()) nxt.pop_back();
    acc = std::move(nxt);
  }
  acc.resize(cs.size(), DyadicInterval());
  std::reverse(acc.begin(), acc.end());
  size_t n = acc.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i >= k + 1; --i) acc[i - 1] = acc[i - 1] + acc[i];
  for (auto& c : acc) c = c.outward(round_prec);
  return acc;
}

}  // namespace

std::pair<int, int> interval_sign_variations(const std::vector<DyadicInterval>& cs) {
  constexpr int kNone = 0, kPlus = 1, kMinus = 2;
  constexpr int kInf = 1 << 20;
  int mn[3] = {0, kInf, kInf};
  int mx[3] = {0, -kInf, -kInf};
  for (const auto& c : cs) {
    bool can_zero = c.contains_zero();
    bool can_plus = c.hi().sign() > 0;
    bool can_minus = c.lo().sign() < 0;
    int nmn[3] = {kInf, kInf, kInf};
    int nmx[3] = {-kInf, -kInf, -kInf};
    for (int s = 0; s < 3; ++s) {
      if (mn[s] < kInf) {
        if (can_zero) nmn[s] = std::min(nmn[s], mn[s]);
        if (can_plus) nmn[kPlus] = std::min(nmn[kPlus], mn[s] + (s == kMinus ? 1 : 0));
        if (can_minus) nmn[kMinus] = std::min(nmn[kMinus], mn[s] + (s == kPlus ? 1 : 0));
      }
      if (mx[s] > -kInf) {
        if (can_zero) nmx[s] = std::max(nmx[s], mx[s]);
        if (can_plus) nmx[kPlus] = std::max(nmx[kPlus], mx[s] + (s == kMinus ? 1 : 0));
        if (can_minus) nmx[kMinus] = std::max(nmx[kMinus], mx[s] + (s == kPlus ? 1 : 0));
      }
    }
    std::copy(nmn, nmn + 3, mn);
    std::copy(nmx, nmx + 3, mx);
  }
  int l = std::min({mn[0], mn[1], mn[2]});
  int u = std::max({mx[0], mx[1], mx[2]});
  return {l, u};
}

namespace {

struct BdcDriver {
  BitstreamPolynomial stream;
  const std::vector<MultipleRootInterval>& multiples;
  const BitstreamBudget& budget;
  long prec;
  std::vector<Dyadic> exact_roots;

  BdcDriver(const BitstreamPolynomial& g, const std::vector<MultipleRootInterval>& m,
            const BitstreamBudget& b)
      : stream(g), multiples(m), budget(b), prec(b.initial_prec) {}

  void escalate() {
    prec *= 2;
    if (prec > budget.max_prec)
      throw PrecisionError("bitstream descartes: precision budget exhausted");
    stream.materialize(prec);
  }

  // Certified sign of the limit polynomial at a dyadic point. With deflation
  // enabled, an exact root found at the point (possible only outside the
  // multiple intervals) is divided out and recorded; otherwise 0 is returned
  // and the caller deals with the root.
  int certified_sign(const Dyadic& m, bool allow_deflate) {
    while (true) {
      DyadicInterval e = stream.eval_point(m);
      if (e.sign() != 0) return e.sign();
      if (stream.has_exact_sign()) {
        int s = stream.exact_sign(m);
        if (s != 0) {
          escalate();
          continue;
        }
        if (!allow_deflate) return 0;
        for (const auto& mi : multiples)
          if (mi.interval.contains(m))
            throw PreconditionError(
                "bitstream descartes: root on the boundary of a multiple-root interval");
        exact_roots.push_back(m);
        stream = stream.deflate(m);
        stream.materialize(prec);
        return certified_sign(m, false);  // sign of the deflated stream at m
      }
      escalate();
    }
  }

  std::pair<int, int> cell_variations(const Dyadic& a, const Dyadic& b) {
    auto t = bdc_transform(stream.materialize(prec), a, b, prec + 32);
    return interval_sign_variations(t);
  }
};

}  // namespace

std::vector<DyadicInterval> bitstream_isolate_simple(
    const BitstreamPolynomial& g, const std::vector<MultipleRootInterval>& multiples,
    const BitstreamBudget& budget) {
  int n = g.degree();
  if (n <= 0) return {};
  int ksum_total = 0;
  for (const auto& m : multiples) ksum_total += m.multiplicity;
  if (ksum_total >= n) return {};  // all roots are accounted for by multiples

  BdcDriver drv(g, multiples, budget);
  drv.stream.materialize(drv.prec);
  while (drv.stream.coeffs().back().contains_zero()) drv.escalate();

  // Power-of-two Cauchy bound from the interval coefficients.
  long kb = 1;
  {
    const auto& cs = drv.stream.coeffs();
    Dyadic lead_lo = cs.back().abs_lower();
    long lead_log = lead_lo.log2_upper() - 1;  // |lc| >= 2^lead_log
    for (size_t i = 0; i + 1 < cs.size(); ++i) {
      Dyadic up = cs[i].abs_upper();
      if (up.is_zero()) continue;
      kb = std::max(kb, 1 + up.log2_upper() - lead_log);
    }
  }
  Dyadic bound = Dyadic::pow2(kb);
  if (drv.certified_sign(-bound, false) == 0 || drv.certified_sign(bound, false) == 0)
    throw Error("bitstream descartes: root bound not strict");

  std::deque<std::pair<Dyadic, Dyadic>> cells;
  cells.emplace_back(-bound, bound);
  std::vector<std::pair<Dyadic, Dyadic>> accepted;
  int processed = 0;

  while (!cells.empty()) {
    if (++processed > budget.max_cells)
      throw PrecisionError("bitstream descartes: cell budget exhausted");
    auto [a, b] = cells.front();
    cells.pop_front();
    auto [l, u] = drv.cell_variations(a, b);
    if (u == 0) continue;
    bool inside_some = false, disjoint_all = true;
    int ksum = 0;
    for (const auto& mi : multiples) {
      if (mi.interval.lo() <= a && b <= mi.interval.hi()) inside_some = true;
      if (!(b <= mi.interval.lo() || mi.interval.hi() <= a)) disjoint_all = false;
      if (a <= mi.interval.lo() && mi.interval.hi() <= b) ksum += mi.multiplicity;
    }
    if (inside_some) continue;
    if (ksum > 0 && u <= ksum) continue;
    if (u == 1 && disjoint_all) {
      if (l == 1) {
        accepted.emplace_back(a, b);
        continue;
      }
      drv.escalate();  // precision-limited ambiguity: retry the same cell
      cells.emplace_front(a, b);
      continue;
    }
    // Subdivide; avoid split points interior to a multiple-root interval.
    Dyadic m = Dyadic::midpoint(a, b);
    for (const auto& mi : multiples) {
      if (mi.interval.lo() < m && m < mi.interval.hi()) {
        Dyadic lo = mi.interval.lo(), hi = mi.interval.hi();
        bool lo_in = a < lo && lo < b, hi_in = a < hi && hi < b;
        if (lo_in && hi_in)
          m = (m - lo <= hi - m) ? lo : hi;
        else if (lo_in)
          m = lo;
        else
          m = hi;
        break;
      }
    }
    drv.certified_sign(m, true);  // certifies nonroot, or deflates an exact root at m
    cells.emplace_back(a, m);
    cells.emplace_back(m, b);
  }

  // Exact dyadic roots: a symmetric interval clear of the remaining roots,
  // the multiple intervals, and the other exact roots.
  std::vector<DyadicInterval> exact_ivs;
  for (const Dyadic& m : drv.exact_roots) {
    Dyadic w = Dyadic::pow2(-2);
    while (true) {
      Dyadic lo = m - w, hi = m + w;
      DyadicInterval cand(lo, hi);
      bool ok = true;
      for (const auto& mi : multiples)
        if (!cand.disjoint(mi.interval)) ok = false;
      for (const Dyadic& m2 : drv.exact_roots)
        if (!(m2 == m) && lo <= m2 && m2 <= hi) ok = false;
      if (ok && drv.stream.degree() >= 1) {
        auto [l2, u2] = drv.cell_variations(lo, hi);
        if (u2 != 0) ok = false;
      }
      if (ok && (drv.certified_sign(lo, false) == 0 || drv.certified_sign(hi, false) == 0))
        ok = false;
      if (ok) break;
      w = w.mul_pow2(-1);
    }
    exact_ivs.emplace_back(m - w, m + w);
  }

  // Accepted cells can touch an exact root or a multiple-root interval at a
  // boundary point; bisect them onto their own root until strictly clear.
  auto shrink_cell = [&](DyadicInterval cell) {
    int slo = drv.certified_sign(cell.lo(), false);
    auto clear = [&](const DyadicInterval& c) {
      for (const auto& iv : exact_ivs)
        if (!c.disjoint(iv)) return false;
      for (const auto& mi : multiples)
        if (!c.disjoint(mi.interval)) return false;
      return true;
    };
    while (!clear(cell)) {
      Dyadic m = cell.mid();
      int sm = drv.certified_sign(m, false);
      if (sm == 0) {
        Dyadic w = cell.width().mul_pow2(-3);
        cell = DyadicInterval(m - w, m + w);
        slo = drv.certified_sign(cell.lo(), false);
        continue;
      }
      cell = (sm == slo) ? DyadicInterval(m, cell.hi()) : DyadicInterval(cell.lo(), m);
    }
    return cell;
  };

  std::vector<DyadicInterval> out;
  out.reserve(accepted.size() + exact_ivs.size());
  for (auto& [a, b] : accepted) out.push_back(shrink_cell(DyadicInterval(a, b)));
  for (auto& iv : exact_ivs) out.push_back(iv);

  std::sort(out.begin(), out.end(),
            [](const DyadicInterval& x, const DyadicInterval& y) { return x.lo() < y.lo(); });
  return out;
}

DyadicInterval bitstream_refine_root(const BitstreamPolynomial& g, const DyadicInterval& iv,
                                     const Dyadic& target_width) {
  BitstreamPolynomial stream = g;
  long prec = std::max<long>(64, stream.current_prec());
  auto certified_sign = [&](const Dyadic& x) {
    while (true) {
      DyadicInterval e = stream.eval_point(x);
      if (e.sign() != 0) return e.sign();
      if (stream.has_exact_sign()) return stream.exact_sign(x);
      prec *= 2;
      if (prec > (1L << 24)) throw PrecisionError("bitstream_refine_root: precision exhausted");
      stream.materialize(prec);
    }
  };
  Dyadic lo = iv.lo(), hi = iv.hi();
  int slo = certified_sign(lo);
  if (slo == 0) throw PreconditionError("bitstream_refine_root: endpoint is a root");
  while (hi - lo > target_width) {
    Dyadic m = Dyadic::midpoint(lo, hi);
    int sm = certified_sign(m);
    if (sm == 0) {
      Dyadic w = (hi - lo).mul_pow2(-3);
      lo = m - w;
      hi = m + w;
      slo = certified_sign(lo);
      continue;
    }
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
  return DyadicInterval(lo, hi);
}

}  // namespace curvetop
