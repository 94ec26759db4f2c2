#include "curvetop/pipeline.hpp"

#include <algorithm>
#include <chrono>

namespace curvetop {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BigRat floor_rat(const BigRat& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return BigRat(fl);
}

// Simplest rational in the open interval (lo, hi), 0 <= lo < hi.
BigRat simplest_nonneg(const BigRat& lo, const BigRat& hi) {
  BigRat fl = floor_rat(lo);
  BigRat n = fl + 1;
  if (n < hi) return n;
  // Recurse on the reciprocal of the fractional parts.
  if (lo == fl) {
    // Interval (a, hi) with a integer: pick a + 1/ceil-ish of 1/(hi - a).
    BigRat inv = BigRat(1) / (hi - fl);
    BigRat k = floor_rat(inv) + 1;
    return fl + BigRat(1) / k;
  }
  return fl + BigRat(1) / simplest_nonneg(BigRat(1) / (hi - fl), BigRat(1) / (lo - fl));
}

}  // namespace

BigRat simplest_rational_between(const BigRat& lo, const BigRat& hi) {
  if (!(lo < hi)) throw PreconditionError("simplest_rational_between: empty interval");
  if (lo < 0 && hi > 0) return BigRat(0);
  if (lo >= 0) return simplest_nonneg(lo, hi);
  return -simplest_nonneg(-hi, -lo);
}

ProjectionData project(CurveContext& ctx) {
  ProjectionData out;
  const SquareFreeFactorization& sf = ctx.r_factorization();
  std::vector<std::pair<AlgebraicNumber, int>> events;
  for (const auto& factor : sf.factors) {
    if (factor.poly.degree() < 1) continue;
    for (auto& root : descartes_isolate(factor.poly))
      events.emplace_back(std::move(root), factor.multiplicity);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first) == Order::Less;
  });
  // Strictly disjoint isolating intervals with positive gaps, so separating
  // rationals exist between consecutive intervals.
  for (size_t i = 0; i + 1 < events.size(); ++i)
    while (events[i].first.interval().hi() >= events[i + 1].first.interval().lo()) {
      events[i].first.refine();
      events[i + 1].first.refine();
    }
  for (auto& [root, mult] : events) {
    out.events.push_back(std::move(root));
    out.multiplicities.push_back(mult);
  }
  if (out.events.empty()) {
    out.separators.push_back(BigRat(0));
    return out;
  }
  out.separators.push_back(floor_rat(out.events.front().interval().lo().to_rational()) - 1);
  for (size_t i = 0; i + 1 < out.events.size(); ++i)
    out.separators.push_back(
        simplest_rational_between(out.events[i].interval().hi().to_rational(),
                                  out.events[i + 1].interval().lo().to_rational()));
  out.separators.push_back(floor_rat(out.events.back().interval().hi().to_rational()) + 1);
  return out;
}

namespace {

struct CurveAnalysis {
  CurveGraph graph;
  std::vector<Fiber> event_fibers;
  std::vector<ArcSet> arc_sets;
};

// Analysis of a content-free square-free curve with deg_y >= 1.
CurveAnalysis analyze_primitive_curve(const BivariatePolynomial& f, const AnalyzeConfig& config,
                                      AnalysisReport& report) {
  CurveAnalysis out;
  CurveGraph& graph = out.graph;
  auto t0 = std::chrono::steady_clock::now();

  CurveContext ctx(f);
  ProjectionData proj = project(ctx);
  size_t m = proj.events.size();
  report.event_count = static_cast<int>(m);
  report.projection_seconds = seconds_since(t0);

  // Lifting phase: event fibers (FastLift filtered, Lift fallback) and
  // intermediate fibers at the separators.
  auto t1 = std::chrono::steady_clock::now();
  SolveBudget budget;
  budget.max_stages = config.fastlift_stages;
  for (size_t k = 0; k < m; ++k) {
    TeissierBoundData bound = teissier_bound(ctx, proj.events[k]);
    std::optional<Fiber> fiber;
    if (!config.force_lift && config.fastlift_stages > 0) {
      fiber = fast_lift(ctx, proj.events[k], bound, budget);
      if (!fiber) ++report.fastlift_failures;
    }
    if (!fiber) {
      fiber = lift_complete(ctx, proj.events[k]);
      ++report.fibers_lift;
    } else {
      ++report.fibers_fastlift;
    }
    report.teissier_bounds.emplace_back(bound.upper_bound,
                                        static_cast<int>(fiber->points.size()));
    out.event_fibers.push_back(std::move(*fiber));
  }
  for (const BigRat& q : proj.separators) {
    ArcSet arcs;
    arcs.q = q;
    arcs.fiber = intermediate_fiber(f, q);
    ++report.intermediate_fibers;
    out.arc_sets.push_back(std::move(arcs));
  }
  report.lifting_seconds = seconds_since(t1);

  // Connection phase.
  auto t2 = std::chrono::steady_clock::now();
  std::vector<ConnectionMap> left_maps(m), right_maps(m);
  for (size_t k = 0; k < m; ++k) {
    const Fiber& fiber = out.event_fibers[k];
    for (Side side : {Side::Left, Side::Right}) {
      const ArcSet& arcs = out.arc_sets[side == Side::Left ? k : k + 1];
      ConnectionMap map;
      if (generic_applicable(fiber)) {
        try {
          map = connect_generic(fiber, arcs.arc_count(), side);
        } catch (const PreconditionError&) {
          map = connect_nongeneric(f, proj.events[k], fiber, arcs, side);
        }
      } else {
        map = connect_nongeneric(f, proj.events[k], fiber, arcs, side);
      }
      (side == Side::Left ? left_maps : right_maps)[k] = std::move(map);
    }
  }
  report.connection_seconds = seconds_since(t2);

  // Assembly: columns q_0, e_0, q_1, ..., e_{m-1}, q_m in x-order.
  for (size_t i = 0; i <= m; ++i) {
    graph.add_column(Coordinate::from_rational(out.arc_sets[i].q), CurveGraph::Column::Kind::Separator);
    if (i < m)
      graph.add_column(Coordinate::from_algebraic(proj.events[i]), CurveGraph::Column::Kind::Event);
  }
  graph.column_order.resize(graph.columns.size());
  for (size_t i = 0; i < graph.columns.size(); ++i) graph.column_order[i] = static_cast<int>(i);

  graph.event_vertex_ids.resize(m);
  graph.event_column_ids.resize(m);
  for (size_t k = 0; k < m; ++k) {
    int col = static_cast<int>(2 * k + 1);
    graph.event_column_ids[k] = col;
    const Fiber& fiber = out.event_fibers[k];
    for (size_t i = 0; i < fiber.points.size(); ++i) {
      GraphVertex v;
      v.x = Coordinate::from_algebraic(proj.events[k]);
      v.y = fiber.points[i].y;
      v.kind = GraphVertex::Kind::Critical;
      v.column = col;
      v.fiber_index = static_cast<int>(i);
      v.multiplicity = fiber.points[i].multiplicity;
      v.critical_point = fiber.points[i].critical;
      graph.event_vertex_ids[k].push_back(graph.add_vertex(std::move(v)));
    }
  }
  for (size_t i = 0; i <= m; ++i) {
    const ArcSet& arcs = out.arc_sets[i];
    for (int j = 0; j < arcs.arc_count(); ++j) {
      GraphVertex v;
      v.x = Coordinate::from_rational(arcs.q);
      v.y = arcs.fiber.points[static_cast<size_t>(j)].y;
      v.kind = GraphVertex::Kind::Intermediate;
      v.column = static_cast<int>(2 * i);
      v.fiber_index = j;
      int vid = graph.add_vertex(std::move(v));
      ArcGeom arc;
      arc.interval_index = static_cast<int>(i);
      arc.arc_index = j;
      arc.path = {vid};
      arc.left_event = static_cast<int>(i) - 1;
      arc.right_event = i < m ? static_cast<int>(i) : -1;
      if (arc.left_event >= 0) arc.left = right_maps[static_cast<size_t>(arc.left_event)][static_cast<size_t>(j)];
      if (arc.right_event >= 0) arc.right = left_maps[static_cast<size_t>(arc.right_event)][static_cast<size_t>(j)];
      graph.arcs.push_back(std::move(arc));
    }
  }
  return out;
}

void refine_vertex_coordinates(CurveGraph& graph, long prec) {
  Dyadic width = Dyadic::pow2(-prec);
  for (auto& v : graph.vertices) {
    if (v.y) v.y->refine_below(width);
    (void)v.x.approx(prec);
  }
}

}  // namespace

CurveGraph merge_vertical_lines(CurveGraph graph, const UnivariatePolynomial& h,
                                const BivariatePolynomial& fprime, const AnalyzeConfig& config) {
  if (h.degree() < 1) return graph;
  std::vector<AlgebraicNumber> roots = descartes_isolate(h);
  for (const AlgebraicNumber& alpha0 : roots) {
    Coordinate cx = alpha0.is_rational() ? Coordinate::from_rational(alpha0.rational_value())
                                         : Coordinate::from_algebraic(alpha0);
    // Locate the line among the existing columns.
    int matching_column = -1;
    int events_below = 0;
    for (int cid : graph.column_order) {
      const auto& col = graph.columns[static_cast<size_t>(cid)];
      Order o = col.x.compare_with(cx);
      if (o == Order::Equal) {
        matching_column = cid;
        break;
      }
      if (o == Order::Less && col.kind == CurveGraph::Column::Kind::Event) ++events_below;
    }

    std::vector<int> chain;
    if (matching_column >= 0) {
      chain = graph.columns[static_cast<size_t>(matching_column)].vertex_ids;
      if (chain.empty()) {
        // Empty fiber at this column (e.g. an asymptote event): anchor the
        // line with a vertex at a point that is certainly off the curve paths.
        GraphVertex v;
        v.x = graph.columns[static_cast<size_t>(matching_column)].x;
        v.y = make_algebraic_root(AlgebraicNumber::from_rational(BigRat(0)));
        v.kind = GraphVertex::Kind::VerticalLine;
        v.column = matching_column;
        chain.push_back(graph.add_vertex(std::move(v)));
      }
    } else {
      // A new column strictly inside a delineable interval (or outside all
      // events): the line crosses each arc of that interval exactly once,
      // at the j-th root of the simple fiber.
      int interval_index = events_below;
      Fiber crossing;
      if (alpha0.is_rational())
        crossing = intermediate_fiber(fprime, alpha0.rational_value());
      else
        crossing = simple_fiber(fprime, alpha0);
      int col = graph.add_column(cx, CurveGraph::Column::Kind::Line);
      // Keep column_order sorted.
      auto order_pos = graph.column_order.begin();
      while (order_pos != graph.column_order.end() &&
             graph.columns[static_cast<size_t>(*order_pos)].x.compare_with(cx) == Order::Less)
        ++order_pos;
      graph.column_order.insert(order_pos, col);

      std::vector<ArcGeom*> interval_arcs;
      for (auto& arc : graph.arcs)
        if (arc.interval_index == interval_index) interval_arcs.push_back(&arc);
      std::sort(interval_arcs.begin(), interval_arcs.end(),
                [](const ArcGeom* a, const ArcGeom* b) { return a->arc_index < b->arc_index; });
      if (static_cast<int>(interval_arcs.size()) != static_cast<int>(crossing.points.size()))
        throw Error("merge_vertical_lines: crossing count does not match the arc count");
      for (size_t j = 0; j < crossing.points.size(); ++j) {
        GraphVertex v;
        v.x = cx;
        v.y = crossing.points[j].y;
        v.kind = GraphVertex::Kind::VerticalLine;
        v.column = col;
        v.fiber_index = static_cast<int>(j);
        int vid = graph.add_vertex(std::move(v));
        // Insert into the arc path at the sorted x-position.
        auto& path = interval_arcs[j]->path;
        auto pos = path.begin();
        while (pos != path.end() &&
               graph.vertices[static_cast<size_t>(*pos)].x.compare_with(cx) == Order::Less)
          ++pos;
        path.insert(pos, vid);
        chain.push_back(vid);
      }
      if (chain.empty()) {
        GraphVertex v;
        v.x = cx;
        v.y = make_algebraic_root(AlgebraicNumber::from_rational(BigRat(0)));
        v.kind = GraphVertex::Kind::VerticalLine;
        v.column = col;
        chain.push_back(graph.add_vertex(std::move(v)));
      }
    }
    graph.vertical_chains.push_back(std::move(chain));
  }
  refine_vertex_coordinates(graph, config.precision_bits);
  graph.finalize();
  return graph;
}

std::pair<CurveGraph, AnalysisReport> analyze(const BivariatePolynomial& f,
                                              const AnalyzeConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport report;
  if (f.is_zero()) throw PreconditionError("analyze: zero polynomial");
  if (f.is_constant()) throw PreconditionError("analyze: constant polynomial defines no curve");

  // Split off the content: h(x) carries the vertical lines.
  UnivariatePolynomial h = f.degree_y() == 0 ? f.y_coeffs()[0] : content_y(f);
  BivariatePolynomial fprime =
      f.degree_y() == 0 ? BivariatePolynomial::constant(1) : divexact_univariate_x(f, h);
  h = h.primitive_positive();

  if (config.make_squarefree) {
    if (h.degree() >= 1) h = square_free_part(h);
    if (fprime.degree_y() >= 1) {
      BivariatePolynomial g = gcd_bivariate(fprime, derive(fprime, Var::Y, 1));
      if (g.degree_x() > 0 || g.degree_y() > 0) fprime = divexact(fprime, g);
    }
  } else {
    if (h.degree() >= 1) {
      UnivariatePolynomial hg = gcd_univariate(h, h.derivative());
      if (hg.degree() >= 1)
        throw PreconditionError("analyze: input is not square-free (repeated content factor " +
                                hg.to_string() + ")");
    }
    if (fprime.degree_y() >= 1) {
      BivariatePolynomial g = gcd_bivariate(fprime, derive(fprime, Var::Y, 1));
      if (g.degree_x() > 0 || g.degree_y() > 0)
        throw PreconditionError("analyze: input is not square-free (repeated factor divides " +
                                g.to_string() + ")");
    }
  }

  CurveGraph graph;
  if (fprime.degree_y() >= 1) {
    CurveAnalysis analysis = analyze_primitive_curve(fprime, config, report);
    graph = std::move(analysis.graph);
  }
  if (h.degree() >= 1) {
    report.vertical_lines = static_cast<int>(descartes_isolate(h).size());
    graph = merge_vertical_lines(std::move(graph), h, fprime, config);
  } else {
    refine_vertex_coordinates(graph, config.precision_bits);
    graph.finalize();
  }
  report.total_seconds = seconds_since(t0);
  return {std::move(graph), report};
}

}  // namespace curvetop
