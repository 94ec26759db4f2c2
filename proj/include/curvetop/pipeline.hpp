#ifndef CURVETOP_PIPELINE_HPP
#define CURVETOP_PIPELINE_HPP

#include "curvetop/graph.hpp"

namespace curvetop {

struct AnalyzeConfig {
  long precision_bits = 30;   // output coordinate precision
  int fastlift_stages = 4;    // precision stages before falling back (0 = pure Lift)
  bool force_lift = false;
  bool make_squarefree = false;
};

// Projection phase output: sorted event values (with multiplicities in R) and
// separating rationals, one per delineable interval.
struct ProjectionData {
  std::vector<AlgebraicNumber> events;
  std::vector<int> multiplicities;
  std::vector<BigRat> separators;  // events.size() + 1 values
};

ProjectionData project(CurveContext& ctx);

// Smallest-denominator rational strictly between lo and hi (Stern-Brocot).
BigRat simplest_rational_between(const BigRat& lo, const BigRat& hi);

// End-to-end analysis: content/vertical-line handling, projection, lifting
// (FastLift with Lift fallback), connection, assembly.
std::pair<CurveGraph, AnalysisReport> analyze(const BivariatePolynomial& f,
                                              const AnalyzeConfig& config = {});

// Thread the vertical lines h = 0 through the analysis of C' = V(fprime):
// chains through existing fibers at matching columns, new crossing vertices
// (with the affected arcs split) elsewhere.
CurveGraph merge_vertical_lines(CurveGraph graph, const UnivariatePolynomial& h,
                                const BivariatePolynomial& fprime, const AnalyzeConfig& config = {});

}  // namespace curvetop

#endif  // CURVETOP_PIPELINE_HPP
