#include "curvetop/lift.hpp"

#include <algorithm>

namespace curvetop {

namespace {

class AlgebraicRoot final : public RefinableRoot {
 public:
  explicit AlgebraicRoot(AlgebraicNumber a) : a_(std::move(a)) {}
  DyadicInterval interval() const override { return a_.interval(); }
  void refine_below(const Dyadic& width) override { a_.refine_below(width); }
  const AlgebraicNumber& number() const { return a_; }

 private:
  AlgebraicNumber a_;
};

class BitstreamRoot final : public RefinableRoot {
 public:
  BitstreamRoot(BitstreamPolynomial stream, DyadicInterval iv)
      : stream_(std::move(stream)), iv_(std::move(iv)) {}
  DyadicInterval interval() const override { return iv_; }
  void refine_below(const Dyadic& width) override {
    if (iv_.width() > width) iv_ = bitstream_refine_root(stream_, iv_, width);
  }

 private:
  BitstreamPolynomial stream_;
  DyadicInterval iv_;
};

class ClusterRoot final : public RefinableRoot {
 public:
  ClusterRoot(std::shared_ptr<ClusterRootRefiner> refiner, size_t index)
      : refiner_(std::move(refiner)), index_(index) {}
  DyadicInterval interval() const override { return refiner_->interval(index_); }
  void refine_below(const Dyadic& width) override { refiner_->refine_below(index_, width); }

 private:
  std::shared_ptr<ClusterRootRefiner> refiner_;
  size_t index_;
};

}  // namespace

std::shared_ptr<RefinableRoot> make_algebraic_root(AlgebraicNumber a) {
  return std::make_shared<AlgebraicRoot>(std::move(a));
}
std::shared_ptr<RefinableRoot> make_bitstream_root(BitstreamPolynomial stream, DyadicInterval iv) {
  return std::make_shared<BitstreamRoot>(std::move(stream), std::move(iv));
}
std::shared_ptr<RefinableRoot> make_cluster_root(std::shared_ptr<ClusterRootRefiner> refiner,
                                                 size_t index) {
  return std::make_shared<ClusterRoot>(std::move(refiner), index);
}

CurveContext::CurveContext(BivariatePolynomial f) {
  if (f.is_zero() || f.degree_y() < 1)
    throw PreconditionError("CurveContext: need a nonzero curve with positive y-degree");
  fx_ = derive(f, Var::X, 1);
  dys_.push_back(std::move(f));
  r_ = resultant(dys_[0], derive(dys_[0], Var::Y, 1), Var::Y);
  if (r_.is_zero())
    throw PreconditionError("CurveContext: res(f, f_y) vanishes; f is not square-free");
  rsf_ = yun_squarefree(r_);
}

const BivariatePolynomial& CurveContext::dy(int order) {
  while (static_cast<int>(dys_.size()) <= order)
    dys_.push_back(derive(dys_.back(), Var::Y, 1));
  return dys_[static_cast<size_t>(order)];
}

const UnivariatePolynomial& CurveContext::resultant_q() {
  if (!q_) {
    if (fx_.is_zero()) {
      q_ = UnivariatePolynomial::constant(1);
    } else {
      BivariatePolynomial h = gcd_bivariate(fx_, dy(1));
      BivariatePolynomial fxs = fx_, fys = dy(1);
      if (h.degree_x() > 0 || h.degree_y() > 0) {
        fxs = divexact(fxs, h);
        fys = divexact(fys, h);
      }
      q_ = resultant(fxs, fys, Var::Y);
    }
  }
  return *q_;
}

const SquareFreeFactorization& CurveContext::q_factorization() {
  if (!qsf_) qsf_ = yun_squarefree(resultant_q());
  return *qsf_;
}

const std::vector<SystemSolution>& CurveContext::critical_points() {
  if (!critical_) {
    SolveSystemOptions opts;
    opts.resultant_x = &r_;
    critical_ = solve_system(dys_[0], dy(1), opts);
  }
  return *critical_;
}

int fiber_degree_at(const BivariatePolynomial& f, const AlgebraicNumber& alpha) {
  const auto& cs = f.y_coeffs();
  for (size_t i = cs.size(); i-- > 0;)
    if (alpha.sign_of(cs[i]) != 0) return static_cast<int>(i);
  throw PreconditionError("fiber_degree_at: f(alpha, y) vanishes identically");
}

BitstreamPolynomial fiber_stream(const BivariatePolynomial& f, const AlgebraicNumber& alpha,
                                 int degree) {
  std::vector<UnivariatePolynomial> cs(f.y_coeffs().begin(),
                                       f.y_coeffs().begin() + degree + 1);
  AlgebraicNumber a = alpha;
  auto oracle = [cs, a](long prec) {
    Dyadic mu = Dyadic::pow2(-prec);
    std::vector<DyadicInterval> out(cs.size());
    while (true) {
      bool ok = true;
      for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) {
          out[i] = DyadicInterval();
          continue;
        }
        out[i] = cs[i].eval_interval(a.interval());
        if (out[i].width() > mu) ok = false;
      }
      if (ok) return out;
      a.refine();
    }
  };
  BivariatePolynomial full = f;
  AlgebraicNumber a2 = alpha;
  auto exact_sign = [full, a2](const Dyadic& c) {
    SpecializedPolynomial sp = specialize_y(full, c.to_rational());
    return a2.sign_of(sp.poly);
  };
  return BitstreamPolynomial(degree, std::move(oracle), std::move(exact_sign));
}

Fiber intermediate_fiber(const BivariatePolynomial& f, const BigRat& q) {
  SpecializedPolynomial sp = specialize_x(f, q);
  if (sp.poly.is_zero())
    throw PreconditionError("intermediate_fiber: f(q, y) vanishes identically");
  Fiber fiber;
  fiber.x_rational = q;
  fiber.fiber_degree = sp.poly.degree();
  fiber.asymptote = sp.poly.degree() < f.degree_y();
  fiber.method = FiberMethod::Descartes;
  if (sp.poly.degree() == 0) return fiber;
  if (gcd_univariate(sp.poly, sp.poly.derivative()).degree() != 0)
    throw PreconditionError("intermediate_fiber: f(q, y) is not square-free");
  for (auto& root : descartes_isolate(sp.poly))
    fiber.points.push_back({make_algebraic_root(std::move(root)), 1, false});
  return fiber;
}

TeissierBoundData teissier_bound(CurveContext& ctx, const AlgebraicNumber& alpha) {
  TeissierBoundData out;
  int n = ctx.f().degree_y();
  out.fiber_degree = fiber_degree_at(ctx.f(), alpha);
  out.mult_r = multiplicity_at(ctx.r_factorization(), alpha);
  if (out.fiber_degree < n) {
    out.asymptote = true;
    out.upper_bound = out.fiber_degree;
    return out;
  }
  out.mult_q = multiplicity_at(ctx.q_factorization(), alpha);
  out.upper_bound = n - out.mult_r + out.mult_q;
  out.upper_bound = std::max(0, std::min(out.upper_bound, out.fiber_degree));
  return out;
}

std::optional<Fiber> fast_lift(CurveContext& ctx, const AlgebraicNumber& alpha,
                               const TeissierBoundData& bound, const SolveBudget& budget) {
  Fiber fiber;
  fiber.x_algebraic = alpha;
  fiber.fiber_degree = bound.fiber_degree;
  fiber.asymptote = bound.asymptote;
  fiber.method = FiberMethod::FastLift;
  if (bound.fiber_degree == 0) return fiber;  // constant nonzero fiber polynomial

  BitstreamPolynomial stream = fiber_stream(ctx.f(), alpha, bound.fiber_degree);
  SolveResult res = certified_solve(stream, bound.upper_bound, budget);
  if (!res.success) return std::nullopt;
  auto refiner = std::make_shared<ClusterRootRefiner>(stream, res.clusters, budget);
  if (!refiner->ok()) return std::nullopt;
  for (size_t i = 0; i < refiner->size(); ++i) {
    int mult = refiner->multiplicity(i);
    fiber.points.push_back({make_cluster_root(refiner, i), mult, mult >= 2});
  }
  return fiber;
}

Fiber lift_complete(CurveContext& ctx, const AlgebraicNumber& alpha) {
  Fiber fiber;
  fiber.x_algebraic = alpha;
  fiber.fiber_degree = fiber_degree_at(ctx.f(), alpha);
  fiber.asymptote = fiber.fiber_degree < ctx.f().degree_y();
  fiber.method = FiberMethod::Lift;
  if (fiber.fiber_degree == 0) return fiber;

  // Multiple roots: critical points above alpha, with k_i from the exact
  // derivative cascade.
  std::vector<SystemSolution> pts = solutions_on_fiber(ctx.critical_points(), alpha);
  AlgebraicNumber a = alpha;
  std::vector<AlgebraicNumber> betas;
  std::vector<int> orders;
  for (const auto& pt : pts) {
    int k = 2;
    while (k <= fiber.fiber_degree &&
           sign_at_algebraic_point(ctx.dy(k), a, pt.y) == 0)
      ++k;
    if (k > fiber.fiber_degree)
      throw Error("lift_complete: derivative order exceeded the fiber degree");
    betas.push_back(pt.y);
    orders.push_back(k);
  }

  // Refine each interval until the k-th derivative excludes zero over the
  // closed box; the mean value theorem then makes the interval isolating.
  for (size_t j = 0; j < betas.size(); ++j) {
    int guard = 0;
    while (true) {
      DyadicInterval e = eval_box(ctx.dy(orders[j]), Box{a.interval(), betas[j].interval()});
      if (e.sign() != 0) break;
      a.refine();
      betas[j].refine();
      if (++guard > 4096) throw PrecisionError("lift_complete: exclusion refinement stalled");
    }
  }

  std::vector<MultipleRootInterval> multiples;
  for (size_t j = 0; j < betas.size(); ++j)
    multiples.push_back({betas[j].interval(), orders[j], static_cast<int>(j)});

  BitstreamPolynomial stream = fiber_stream(ctx.f(), a, fiber.fiber_degree);
  std::vector<DyadicInterval> simples = bitstream_isolate_simple(stream, multiples);

  for (size_t j = 0; j < betas.size(); ++j)
    fiber.points.push_back({make_algebraic_root(betas[j]), orders[j], true});
  for (const auto& iv : simples)
    fiber.points.push_back({make_bitstream_root(stream, iv), 1, false});
  std::sort(fiber.points.begin(), fiber.points.end(), [](const FiberPoint& p, const FiberPoint& q) {
    return p.y->interval().lo() < q.y->interval().lo();
  });
  return fiber;
}

Fiber simple_fiber(const BivariatePolynomial& f, const AlgebraicNumber& alpha) {
  Fiber fiber;
  fiber.x_algebraic = alpha;
  fiber.fiber_degree = fiber_degree_at(f, alpha);
  fiber.asymptote = fiber.fiber_degree < f.degree_y();
  fiber.method = FiberMethod::Lift;
  if (fiber.fiber_degree == 0) return fiber;
  BitstreamPolynomial stream = fiber_stream(f, alpha, fiber.fiber_degree);
  for (const auto& iv : bitstream_isolate_simple(stream, {}))
    fiber.points.push_back({make_bitstream_root(stream, iv), 1, false});
  return fiber;
}

}  // namespace curvetop
