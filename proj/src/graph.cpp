#include "curvetop/graph.hpp"

#include <numeric>
#include <sstream>

namespace curvetop {

DyadicInterval Coordinate::approx(long prec) const {
  if (rational) return DyadicInterval::from_rational_abs(*rational, prec);
  algebraic->refine_below(Dyadic::pow2(-prec));
  return algebraic->interval();
}

Order Coordinate::compare_with(const Coordinate& o) const {
  if (rational && o.rational) {
    if (*rational < *o.rational) return Order::Less;
    if (*rational > *o.rational) return Order::Greater;
    return Order::Equal;
  }
  if (rational) {
    Order rev = compare_to_rational(*o.algebraic, *rational);
    return rev == Order::Less ? Order::Greater : (rev == Order::Greater ? Order::Less : Order::Equal);
  }
  if (o.rational) return compare_to_rational(*algebraic, *o.rational);
  return compare(*algebraic, *o.algebraic);
}

Order Coordinate::compare_with(const BigRat& q) const {
  return compare_with(Coordinate::from_rational(q));
}

int CurveGraph::add_column(Coordinate x, Column::Kind kind) {
  Column c;
  c.id = static_cast<int>(columns.size());
  c.x = std::move(x);
  c.kind = kind;
  columns.push_back(std::move(c));
  return columns.back().id;
}

int CurveGraph::add_vertex(GraphVertex v) {
  int id = static_cast<int>(vertices.size());
  if (v.column >= 0) columns[static_cast<size_t>(v.column)].vertex_ids.push_back(id);
  vertices.push_back(std::move(v));
  return id;
}

void CurveGraph::finalize() {
  edges.clear();
  auto attach = [&](int path_end_vertex, const ArcTarget& t, int event_index, bool left_side) {
    GraphEdge e;
    e.a = path_end_vertex;
    if (event_index < 0) {
      e.kind = left_side ? GraphEdge::Kind::RayLeft : GraphEdge::Kind::RayRight;
      edges.push_back(e);
      return;
    }
    switch (t.kind) {
      case ArcTarget::Kind::Point:
        e.b = event_vertex_ids[static_cast<size_t>(event_index)][static_cast<size_t>(t.point_index)];
        e.kind = GraphEdge::Kind::Segment;
        break;
      case ArcTarget::Kind::NegInf:
        e.kind = GraphEdge::Kind::RayDown;
        e.toward_column = event_column_ids[static_cast<size_t>(event_index)];
        break;
      case ArcTarget::Kind::PosInf:
        e.kind = GraphEdge::Kind::RayUp;
        e.toward_column = event_column_ids[static_cast<size_t>(event_index)];
        break;
    }
    edges.push_back(e);
  };

  for (const auto& arc : arcs) {
    for (size_t i = 0; i + 1 < arc.path.size(); ++i)
      edges.push_back({arc.path[i], arc.path[i + 1], GraphEdge::Kind::Segment, false, -1});
    attach(arc.path.front(), arc.left, arc.left_event, true);
    attach(arc.path.back(), arc.right, arc.right_event, false);
  }
  for (const auto& chain : vertical_chains) {
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      edges.push_back({chain[i], chain[i + 1], GraphEdge::Kind::Segment, true, -1});
    edges.push_back({chain.front(), -1, GraphEdge::Kind::RayDown, true,
                     vertices[static_cast<size_t>(chain.front())].column});
    edges.push_back({chain.back(), -1, GraphEdge::Kind::RayUp, true,
                     vertices[static_cast<size_t>(chain.back())].column});
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int CurveGraph::component_count() const {
  if (vertices.empty()) return 0;
  UnionFind uf(vertices.size());
  for (const auto& e : edges)
    if (e.b >= 0) uf.unite(e.a, e.b);
  int c = 0;
  for (size_t i = 0; i < vertices.size(); ++i)
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
  return c;
}

int CurveGraph::cycle_rank() const {
  int finite_edges = 0;
  for (const auto& e : edges)
    if (e.b >= 0) ++finite_edges;
  if (vertices.empty()) return 0;
  return finite_edges - static_cast<int>(vertices.size()) + component_count();
}

int CurveGraph::degree(int vertex, bool include_rays) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.b >= 0) {
      if (e.a == vertex) ++d;
      if (e.b == vertex) ++d;
    } else if (include_rays && e.a == vertex) {
      ++d;
    }
  }
  return d;
}

std::string AnalysisReport::to_string() const {
  std::ostringstream out;
  out << "events: " << event_count << "\n"
      << "fibers: fastlift=" << fibers_fastlift << " lift=" << fibers_lift
      << " intermediate=" << intermediate_fibers << "\n"
      << "fastlift failures: " << fastlift_failures << "\n"
      << "vertical lines: " << vertical_lines << "\n";
  out << "teissier bounds (m*, real points):";
  for (const auto& [bound, actual] : teissier_bounds) out << " (" << bound << "," << actual << ")";
  out << "\n";
  out << "timings (s): projection=" << projection_seconds << " lifting=" << lifting_seconds
      << " connection=" << connection_seconds << " total=" << total_seconds << "\n";
  return out.str();
}

}  // namespace curvetop
