#ifndef CURVETOP_BISOLVE_HPP
#define CURVETOP_BISOLVE_HPP

#include "curvetop/elim.hpp"
#include "curvetop/realroots.hpp"

namespace curvetop {

// One certified real solution of f = g = 0: the box contains exactly this
// solution, and the coordinate algebraic numbers carry square-free integer
// defining polynomials whose isolating intervals are the box sides.
struct SystemSolution {
  Box box;
  AlgebraicNumber x;
  AlgebraicNumber y;
};

struct SolveSystemOptions {
  // Resultant res_y(f, g) computed elsewhere (e.g. the projection phase).
  const UnivariatePolynomial* resultant_x = nullptr;
};

// Certified real solving of the bivariate system f = g = 0. Boxes are
// pairwise disjoint, every real solution lies in exactly one box, and each
// box contains exactly one solution. Errors when the system has infinitely
// many solutions (nontrivial common factor).
//
// Certification: per x-candidate alpha (real root of res_y(f, g)), the common
// roots of f(alpha, y) and g(alpha, y) are computed exactly as the square-free
// gcd over Q(alpha) (dynamic evaluation: zero-divisor splits refine the
// modulus), then isolated by the bitstream Descartes and matched against the
// y-candidates from res_x(f, g).
std::vector<SystemSolution> solve_system(const BivariatePolynomial& f,
                                         const BivariatePolynomial& g,
                                         const SolveSystemOptions& opts = {});

// The subset with x-coordinate exactly alpha, sorted by y ascending.
std::vector<SystemSolution> solutions_on_fiber(const std::vector<SystemSolution>& solutions,
                                               const AlgebraicNumber& alpha);

// Exact sign of g(alpha, beta). Interval evaluation decides nonzero values;
// the zero case is certified over Q(alpha) by testing beta against the common
// roots of g(alpha, .) and beta's defining polynomial.
int sign_at_algebraic_point(const BivariatePolynomial& g, const AlgebraicNumber& alpha,
                            const AlgebraicNumber& beta);

// Isolates the real roots of every square-free factor, with intervals made
// pairwise disjoint across factors and sorted. Shared by bisolve and the
// projection phase.
std::vector<AlgebraicNumber> isolate_factored_roots(const SquareFreeFactorization& sf);

}  // namespace curvetop

#endif  // CURVETOP_BISOLVE_HPP
