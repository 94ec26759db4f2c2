#include "curvetop/bitstream.hpp"

namespace curvetop {

BitstreamPolynomial::BitstreamPolynomial(int degree, Oracle oracle, ExactSignFn exact_sign)
    : degree_(degree),
      oracle_(std::move(oracle)),
      exact_sign_(std::move(exact_sign)),
      state_(std::make_shared<State>()) {
  if (degree_ < 0) throw Error("BitstreamPolynomial: negative degree");
}

BitstreamPolynomial BitstreamPolynomial::from_exact(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw Error("BitstreamPolynomial::from_exact: zero polynomial");
  int n = p.degree();
  std::vector<DyadicInterval> coeffs;
  coeffs.reserve(n + 1);
  for (int i = 0; i <= n; ++i) coeffs.push_back(DyadicInterval::point(Dyadic(p.coeff(i))));
  return BitstreamPolynomial(
      n, [coeffs](long) { return coeffs; },
      [p](const Dyadic& x) { return p.sign_at(x); });
}

BitstreamPolynomial BitstreamPolynomial::from_rational(const std::vector<BigRat>& coeffs) {
  size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0) --n;
  if (n == 0) throw Error("BitstreamPolynomial::from_rational: zero polynomial");
  std::vector<BigRat> cs(coeffs.begin(), coeffs.begin() + n);
  auto oracle = [cs](long prec) {
    std::vector<DyadicInterval> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(DyadicInterval::from_rational_abs(c, prec));
    return out;
  };
  auto sign = [cs](const Dyadic& x) {
    BigRat acc(0), q = x.to_rational();
    for (size_t i = cs.size(); i-- > 0;) acc = acc * q + cs[i];
    return sgn(acc);
  };
  return BitstreamPolynomial(static_cast<int>(n) - 1, std::move(oracle), std::move(sign));
}

const std::vector<DyadicInterval>& BitstreamPolynomial::materialize(long prec_bits) const {
  State& st = *state_;
  if (st.materialized && st.prec >= prec_bits) return st.coeffs;
  std::vector<DyadicInterval> fresh = oracle_(prec_bits);
  if (static_cast<int>(fresh.size()) != degree_ + 1)
    throw Error("BitstreamPolynomial: oracle returned wrong coefficient count");
  Dyadic mu = Dyadic::pow2(-prec_bits);
  for (auto& c : fresh)
    if (c.width() > mu) throw Error("BitstreamPolynomial: oracle violated width contract");
  if (st.materialized) {
    for (size_t i = 0; i < fresh.size(); ++i) {
      auto isect = fresh[i].intersect(st.coeffs[i]);
      if (!isect) throw Error("BitstreamPolynomial: oracle materializations inconsistent");
      fresh[i] = *isect;
    }
  }
  st.coeffs = std::move(fresh);
  st.prec = prec_bits;
  st.materialized = true;
  return st.coeffs;
}

const std::vector<DyadicInterval>& BitstreamPolynomial::coeffs() const {
  if (!state_->materialized) return materialize(53);
  return state_->coeffs;
}

int BitstreamPolynomial::exact_sign(const Dyadic& x) const {
  if (!exact_sign_) throw Error("BitstreamPolynomial: no exact sign oracle");
  return exact_sign_(x);
}

DyadicInterval BitstreamPolynomial::eval_interval(const DyadicInterval& x) const {
  const auto& cs = coeffs();
  DyadicInterval acc = DyadicInterval::point(Dyadic());
  for (size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
  return acc;
}

ComplexBox BitstreamPolynomial::eval_complex(const ComplexDyadic& z) const {
  const auto& cs = coeffs();
  ComplexBox acc;
  ComplexBox zz = ComplexBox::point(z);
  for (size_t i = cs.size(); i-- > 0;) {
    acc = acc * zz;
    acc.re = acc.re + cs[i];
  }
  return acc;
}

std::vector<Dyadic> BitstreamPolynomial::median() const {
  const auto& cs = coeffs();
  std::vector<Dyadic> m;
  m.reserve(cs.size());
  for (const auto& c : cs) m.push_back(c.mid());
  return m;
}

BitstreamPolynomial BitstreamPolynomial::deflate(const Dyadic& root) const {
  if (degree_ < 1) throw Error("BitstreamPolynomial::deflate: degree too small");
  BitstreamPolynomial parent = *this;
  int n = degree_;
  // Synthetic division inflates widths by ~|root|^n; ask the parent for
  // correspondingly more bits.
  long overhead = 8 + static_cast<long>(n);
  if (!root.is_zero() && root.log2_upper() > 0) overhead += n * (root.log2_upper() + 1);
  auto oracle = [parent, root, n, overhead](long prec) {
    const auto& cs = parent.materialize(prec + overhead);
    std::vector<DyadicInterval> q(static_cast<size_t>(n));
    DyadicInterval carry = cs[static_cast<size_t>(n)];
    DyadicInterval r = DyadicInterval::point(root);
    for (int i = n - 1; i >= 0; --i) {
      q[static_cast<size_t>(i)] = carry;
      carry = cs[static_cast<size_t>(i)] + carry * r;
    }
    return q;
  };
  ExactSignFn sign = nullptr;
  if (exact_sign_) {
    ExactSignFn parent_sign = exact_sign_;
    sign = [parent_sign, root](const Dyadic& x) -> int {
      int s = parent_sign(x);
      if (s == 0) return 0;  // another exact root of the limit
      int denom = (x - root).sign();
      if (denom == 0)
        throw Error("BitstreamPolynomial::deflate: exact sign requested at the deflated root");
      return s * denom;
    };
  }
  return BitstreamPolynomial(n - 1, std::move(oracle), std::move(sign));
}

}  // namespace curvetop
