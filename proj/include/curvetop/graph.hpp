#ifndef CURVETOP_GRAPH_HPP
#define CURVETOP_GRAPH_HPP

#include "curvetop/connect.hpp"

namespace curvetop {

// An exact x-coordinate: a rational (separator columns, rational line roots)
// or an algebraic number (event columns).
struct Coordinate {
  std::optional<BigRat> rational;
  std::optional<AlgebraicNumber> algebraic;

  static Coordinate from_rational(BigRat q) { return {std::move(q), std::nullopt}; }
  static Coordinate from_algebraic(AlgebraicNumber a) { return {std::nullopt, std::move(a)}; }

  DyadicInterval approx(long prec) const;
  Order compare_with(const Coordinate& o) const;
  Order compare_with(const BigRat& q) const;
};

struct GraphVertex {
  Coordinate x;
  std::shared_ptr<RefinableRoot> y;
  enum class Kind { Critical, Intermediate, VerticalLine } kind = Kind::Intermediate;
  int column = -1;       // column id
  int fiber_index = -1;  // position within its fiber, bottom-up
  int multiplicity = 1;
  bool critical_point = false;
};

struct GraphEdge {
  int a = -1;
  int b = -1;  // -1 for rays
  enum class Kind { Segment, RayLeft, RayRight, RayUp, RayDown } kind = Kind::Segment;
  bool vertical = false;    // belongs to a vertical line
  int toward_column = -1;   // column id a vertical ray approaches (asymptotes)
};

// One arc of the curve over a delineable interval: its polyline path (vertex
// ids sorted by x) plus how each end attaches at the bounding event values.
struct ArcGeom {
  int interval_index = -1;
  int arc_index = -1;
  std::vector<int> path;
  ArcTarget left, right;
  int left_event = -1;   // event index, or -1 when the interval is unbounded
  int right_event = -1;
};

// Straight-line graph isotopic to the curve. `vertices`/`edges` are the
// flat output view (edges built by finalize()); columns, arcs and chains keep
// the cylindrical structure that assembly and vertical-line merging need.
struct CurveGraph {
  struct Column {
    int id = -1;
    Coordinate x;
    enum class Kind { Separator, Event, Line } kind = Kind::Separator;
    std::vector<int> vertex_ids;  // bottom-up
  };

  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<Column> columns;            // append-only; ids are indices
  std::vector<int> column_order;          // column ids in ascending x
  std::vector<std::vector<int>> event_vertex_ids;  // per event index
  std::vector<int> event_column_ids;               // per event index
  std::vector<ArcGeom> arcs;
  std::vector<std::vector<int>> vertical_chains;   // per line, bottom-up

  int add_column(Coordinate x, Column::Kind kind);
  int add_vertex(GraphVertex v);

  void finalize();  // rebuild `edges` from arcs, attachments, and chains

  int component_count() const;             // over finite edges
  int cycle_rank() const;                  // E - V + C over finite edges
  int degree(int vertex, bool include_rays) const;
};

struct AnalysisReport {
  int event_count = 0;
  int fibers_fastlift = 0;
  int fibers_lift = 0;
  int fastlift_failures = 0;
  int vertical_lines = 0;
  int intermediate_fibers = 0;
  // per event: (m*_alpha, real fiber point count)
  std::vector<std::pair<int, int>> teissier_bounds;
  double projection_seconds = 0, lifting_seconds = 0, connection_seconds = 0, total_seconds = 0;

  std::string to_string() const;
};

}  // namespace curvetop

#endif  // CURVETOP_GRAPH_HPP
