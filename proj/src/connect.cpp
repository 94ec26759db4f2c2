#include "curvetop/connect.hpp"

namespace curvetop {

bool generic_applicable(const Fiber& fiber) {
  return !fiber.asymptote && fiber.critical_count() == 1;
}

ConnectionMap connect_generic(const Fiber& fiber, int arc_count, Side) {
  if (!generic_applicable(fiber))
    throw PreconditionError("connect_generic: needs exactly one critical point and no asymptote");
  int m_alpha = static_cast<int>(fiber.points.size());
  int i0 = 0;
  for (int i = 0; i < m_alpha; ++i)
    if (fiber.points[static_cast<size_t>(i)].critical) i0 = i;
  int below = i0;                  // points strictly below the critical one
  int above = m_alpha - 1 - i0;    // points strictly above
  if (arc_count < below + above)
    throw PreconditionError("connect_generic: fewer arcs than one-arc points");
  ConnectionMap map(static_cast<size_t>(arc_count));
  for (int j = 0; j < arc_count; ++j) {
    ArcTarget t;
    if (j < below)
      t.point_index = j;  // bottom-up
    else if (j >= arc_count - above)
      t.point_index = m_alpha - (arc_count - j);  // top-down
    else
      t.point_index = i0;
    map[static_cast<size_t>(j)] = t;
  }
  return map;
}

ConnectionMap connect_nongeneric(const BivariatePolynomial& f, const AlgebraicNumber& alpha,
                                 const Fiber& fiber, const ArcSet& arcs, Side side) {
  int m_alpha = static_cast<int>(fiber.points.size());
  // Rational separators between consecutive isolating intervals; the
  // outermost two sit one unit outside. An empty fiber keeps one separator,
  // so the escape direction is still decided.
  std::vector<Dyadic> ts;
  if (m_alpha == 0) {
    ts.push_back(Dyadic());
  } else {
    ts.push_back(fiber.points.front().y->interval().lo() - Dyadic(1));
    for (int i = 1; i < m_alpha; ++i)
      ts.push_back(Dyadic::midpoint(fiber.points[static_cast<size_t>(i - 1)].y->interval().hi(),
                                    fiber.points[static_cast<size_t>(i)].y->interval().lo()));
    ts.push_back(fiber.points.back().y->interval().hi() + Dyadic(1));
  }

  // Refine I(alpha) until no arc can cross any segment I(alpha) x {t_i}.
  AlgebraicNumber a = alpha;
  for (const Dyadic& t : ts) {
    int guard = 0;
    while (eval_box(f, Box{a.interval(), DyadicInterval::point(t)}).sign() == 0) {
      a.refine();
      if (++guard > 8192) throw PrecisionError("connect_nongeneric: separator refinement stalled");
    }
  }

  // Arcs cross x = b at the j-th real root of f(b, y).
  Dyadic b = side == Side::Right ? a.interval().hi() : a.interval().lo();
  SpecializedPolynomial sp = specialize_x(f, b.to_rational());
  std::vector<AlgebraicNumber> gammas;
  if (sp.poly.degree() >= 1) gammas = descartes_isolate(square_free_part(sp.poly));
  if (static_cast<int>(gammas.size()) != arcs.arc_count())
    throw Error("connect_nongeneric: arc count mismatch at the fiber endpoint");

  ConnectionMap map(static_cast<size_t>(arcs.arc_count()));
  for (int j = 0; j < arcs.arc_count(); ++j) {
    const AlgebraicNumber& gamma = gammas[static_cast<size_t>(j)];
    int below = 0;  // number of separators strictly below gamma_j
    for (const Dyadic& t : ts) {
      Order o = compare_to_rational(gamma, t.to_rational());
      if (o == Order::Equal)
        throw Error("connect_nongeneric: arc endpoint hit a separator");
      if (o == Order::Greater) ++below;
    }
    ArcTarget target;
    if (below == 0)
      target.kind = ArcTarget::Kind::NegInf;
    else if (below == static_cast<int>(ts.size()))
      target.kind = ArcTarget::Kind::PosInf;
    else {
      target.kind = ArcTarget::Kind::Point;
      target.point_index = below - 1;
    }
    map[static_cast<size_t>(j)] = target;
  }

  // Arcs are disjoint function graphs; targets must be monotone.
  auto rank = [m_alpha](const ArcTarget& t) {
    if (t.kind == ArcTarget::Kind::NegInf) return -1;
    if (t.kind == ArcTarget::Kind::PosInf) return m_alpha;
    return t.point_index;
  };
  for (size_t j = 0; j + 1 < map.size(); ++j)
    if (rank(map[j]) > rank(map[j + 1]))
      throw Error("connect_nongeneric: non-monotone arc targets");
  return map;
}

}  // namespace curvetop
