#ifndef CURVETOP_CONNECT_HPP
#define CURVETOP_CONNECT_HPP

#include "curvetop/lift.hpp"

namespace curvetop {

enum class Side { Left, Right };

// Arcs over one delineable interval, represented by the fiber at the
// separating rational q.
struct ArcSet {
  BigRat q;
  Fiber fiber;  // all multiplicities 1
  int arc_count() const { return static_cast<int>(fiber.points.size()); }
};

// Where one arc attaches at an event value: a fiber point, or a vertical
// escape to (alpha, -inf)/(alpha, +inf).
struct ArcTarget {
  enum class Kind { Point, NegInf, PosInf } kind = Kind::Point;
  int point_index = -1;

  bool operator==(const ArcTarget& o) const {
    return kind == o.kind && (kind != Kind::Point || point_index == o.point_index);
  }
};

using ConnectionMap = std::vector<ArcTarget>;  // indexed by arc number

// Whether the counting argument of the generic case applies: exactly one
// critical point above alpha and no vertical asymptote.
bool generic_applicable(const Fiber& fiber);

// Generic case: points below the unique critical point take arcs bottom-up,
// points above take arcs top-down, everything left attaches to the critical
// point. Throws PreconditionError when not applicable.
ConnectionMap connect_generic(const Fiber& fiber, int arc_count, Side side);

// Non-generic case: rational separators t_1 < y_1 < t_2 < ... < y_m < t_{m+1},
// I(alpha) refined until no arc crosses a segment I(alpha) x {t_i}, then arcs
// matched through the j-th real root of f(b, y) at the interval endpoint b.
ConnectionMap connect_nongeneric(const BivariatePolynomial& f, const AlgebraicNumber& alpha,
                                 const Fiber& fiber, const ArcSet& arcs, Side side);

}  // namespace curvetop

#endif  // CURVETOP_CONNECT_HPP
