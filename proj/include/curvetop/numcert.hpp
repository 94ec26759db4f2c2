#ifndef CURVETOP_NUMCERT_HPP
#define CURVETOP_NUMCERT_HPP

#include <functional>

#include "curvetop/bitstream.hpp"
#include "curvetop/interval.hpp"

namespace curvetop {

struct SolveBudget {
  long initial_prec = 53;  // mu = 2^-53
  int max_stages = 4;      // precision doublings (mu' = mu^2)
  int sweeps_factor = 4;   // Aberth sweeps per stage = factor * degree
};

// Simultaneous root approximations; z entries stay pairwise distinct.
struct AberthState {
  std::vector<ComplexDyadic> z;
  int iterations = 0;
  long prec = 53;
};

// One certified cluster: an enclosing disc (exact center, upper-bound radius)
// containing exactly `multiplicity` roots of every polynomial in the current
// coefficient neighborhood.
struct RootCluster {
  ComplexDyadic center;
  Dyadic radius;
  int multiplicity = 1;
  std::vector<int> members;  // indices of the member approximation discs
};

struct RootClusterSet {
  std::vector<RootCluster> clusters;
  int degree = 0;
  bool isolating = false;  // set when the cluster count matched the target
  AberthState state;       // resume handle for further refinement
};

// Deterministic starting configuration on a circle at the root bound.
AberthState aberth_initial(const BitstreamPolynomial& g, long prec);

// One simultaneous Aberth-Ehrlich update against the (exact-coefficient)
// median polynomial. Jacobi convention: all pair sums use the previous vector,
// so the step is order-independent. Exact roots of the median are fixed
// points; singular denominators fall back to a deterministic perturbation.
AberthState aberth_step(const AberthState& state, const std::vector<Dyadic>& median);

// Neumaier-Rump inclusion discs D(z_i - r_i, |r_i|) with
// r_i = (n/2) * omega_i / g_n, omega_i = g(z_i) / prod_{j != i} (z_i - z_j),
// evaluated conservatively over the interval coefficients; overlapping discs
// are merged into clusters whose multiplicity is the member count. Throws
// PrecisionError if the leading interval coefficient contains zero.
RootClusterSet neumaier_clusters(const AberthState& state, const BitstreamPolynomial& g);

struct SolveResult {
  RootClusterSet clusters;
  bool success = false;
};

using StageObserver = std::function<void(const RootClusterSet&)>;

// Iterate-and-certify driver: runs Aberth sweeps against the median
// polynomial, checks the Neumaier cluster count against target_count, and on
// stagnation with 0 in [g](z_i) squares the precision. On budget exhaustion
// returns the last (still sound) cluster set with success = false.
SolveResult certified_solve(const BitstreamPolynomial& g, int target_count,
                            const SolveBudget& budget = {}, const StageObserver& observer = nullptr);

struct RealRootList {
  std::vector<std::pair<DyadicInterval, int>> roots;  // (interval, multiplicity), sorted
  bool success = false;
};

// Refines isolating clusters until each one misses the real axis or is
// disjoint from the conjugates of all others; clusters still meeting the axis
// then hold exactly one real root each and are returned as real intervals.
RealRootList extract_real_roots(const RootClusterSet& clusters, const BitstreamPolynomial& g,
                                const SolveBudget& budget = {});

// Refinement handle over the real roots of an isolating cluster set: keeps
// the iteration state alive so the real intervals can be narrowed on demand
// (multiplicity-agnostic, unlike sign bisection).
class ClusterRootRefiner {
 public:
  ClusterRootRefiner(BitstreamPolynomial stream, RootClusterSet clusters,
                     SolveBudget budget = {});
  bool ok() const { return ok_; }
  size_t size() const { return reals_.size(); }
  const DyadicInterval& interval(size_t i) const { return reals_.at(i).first; }
  int multiplicity(size_t i) const { return reals_.at(i).second; }
  void refine_below(size_t i, const Dyadic& width);

 private:
  bool recompute();
  void escalate();

  BitstreamPolynomial stream_;
  RootClusterSet set_;
  SolveBudget budget_;
  bool ok_ = false;
  std::vector<std::pair<DyadicInterval, int>> reals_;
};

}  // namespace curvetop

#endif  // CURVETOP_NUMCERT_HPP
