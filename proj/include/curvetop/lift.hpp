#ifndef CURVETOP_LIFT_HPP
#define CURVETOP_LIFT_HPP

#include <memory>
#include <optional>

#include "curvetop/bisolve.hpp"
#include "curvetop/numcert.hpp"

namespace curvetop {

// A fiber-point ordinate that can be narrowed on demand, independent of how
// it was computed (exact algebraic number, bitstream root, or certified
// cluster). Refinement mutates the shared underlying state; not thread-safe.
class RefinableRoot {
 public:
  virtual ~RefinableRoot() = default;
  virtual DyadicInterval interval() const = 0;
  virtual void refine_below(const Dyadic& width) = 0;
};

std::shared_ptr<RefinableRoot> make_algebraic_root(AlgebraicNumber a);
std::shared_ptr<RefinableRoot> make_bitstream_root(BitstreamPolynomial stream, DyadicInterval iv);
std::shared_ptr<RefinableRoot> make_cluster_root(std::shared_ptr<ClusterRootRefiner> refiner,
                                                 size_t index);

enum class FiberMethod { Descartes, FastLift, Lift };

struct FiberPoint {
  std::shared_ptr<RefinableRoot> y;
  int multiplicity = 1;
  bool critical = false;  // multiplicity >= 2, i.e. f = f_y = 0 there
};

// Ordered real roots of f(x0, y) with multiplicities, x0 rational or
// algebraic. Point intervals are pairwise disjoint and sorted ascending.
struct Fiber {
  std::optional<BigRat> x_rational;
  std::optional<AlgebraicNumber> x_algebraic;
  std::vector<FiberPoint> points;
  int fiber_degree = 0;   // deg f(x0, y)
  bool asymptote = false; // fiber_degree < deg_y f
  FiberMethod method = FiberMethod::Descartes;

  int critical_count() const {
    int c = 0;
    for (const auto& p : points) c += p.critical ? 1 : 0;
    return c;
  }
  int multiplicity_sum() const {
    int c = 0;
    for (const auto& p : points) c += p.multiplicity;
    return c;
  }
};

// deg_y f - mult(R, alpha) + mult(Q, alpha), the upper bound on the number of
// distinct complex roots of f(alpha, y); at a vertical asymptote the bound is
// deg f(alpha, y) itself.
struct TeissierBoundData {
  int upper_bound = 0;  // m*_alpha
  int mult_r = 0;
  int mult_q = 0;
  bool asymptote = false;
  int fiber_degree = 0;
};

// Shared per-curve data: derivatives, the projection resultant R and its
// square-free factorization, and the lazily built second resultant
// Q = res(f_x/h, f_y/h, y) with h = gcd(f_x, f_y).
class CurveContext {
 public:
  explicit CurveContext(BivariatePolynomial f);

  const BivariatePolynomial& f() const { return dys_[0]; }
  const BivariatePolynomial& fx() const { return fx_; }
  const BivariatePolynomial& dy(int order);
  const UnivariatePolynomial& resultant_r() const { return r_; }
  const SquareFreeFactorization& r_factorization() const { return rsf_; }
  const UnivariatePolynomial& resultant_q();
  const SquareFreeFactorization& q_factorization();
  const std::vector<SystemSolution>& critical_points();  // f = f_y = 0

 private:
  std::vector<BivariatePolynomial> dys_;  // dys_[k] = d^k f / dy^k
  BivariatePolynomial fx_;
  UnivariatePolynomial r_;
  SquareFreeFactorization rsf_;
  std::optional<UnivariatePolynomial> q_;
  std::optional<SquareFreeFactorization> qsf_;
  std::optional<std::vector<SystemSolution>> critical_;
};

// deg f(alpha, y), decided by exact vanish tests on the leading coefficients.
// Errors if f(alpha, y) vanishes identically (content not divided out).
int fiber_degree_at(const BivariatePolynomial& f, const AlgebraicNumber& alpha);

// Interval-coefficient view of f(alpha, y), truncated to its true degree.
BitstreamPolynomial fiber_stream(const BivariatePolynomial& f, const AlgebraicNumber& alpha,
                                 int degree);

// Fiber over a separating rational value: f(q, y) is square-free there, so
// plain Descartes isolation applies. Errors if it is not (projection bug).
Fiber intermediate_fiber(const BivariatePolynomial& f, const BigRat& q);

TeissierBoundData teissier_bound(CurveContext& ctx, const AlgebraicNumber& alpha);

// Filter method: certified numerical solve of the fiber polynomial with the
// Teissier bound as the target cluster count. nullopt on budget exhaustion;
// no partial answer escapes.
std::optional<Fiber> fast_lift(CurveContext& ctx, const AlgebraicNumber& alpha,
                               const TeissierBoundData& bound, const SolveBudget& budget = {});

// Complete method: multiple roots from the certified system solver plus the
// derivative cascade (mean-value-theorem interval refinement), ordinary roots
// from the modified bitstream Descartes.
Fiber lift_complete(CurveContext& ctx, const AlgebraicNumber& alpha);

// All-simple fiber at a non-critical algebraic x (used for vertical lines).
Fiber simple_fiber(const BivariatePolynomial& f, const AlgebraicNumber& alpha);

}  // namespace curvetop

#endif  // CURVETOP_LIFT_HPP
