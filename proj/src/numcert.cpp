#include "curvetop/numcert.hpp"

#include <algorithm>
#include <cmath>

namespace curvetop {

namespace {

Dyadic eval_real_poly(const std::vector<Dyadic>& c, const Dyadic& x) {
  Dyadic acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

ComplexDyadic eval_real_poly(const std::vector<Dyadic>& c, const ComplexDyadic& z) {
  ComplexDyadic acc;
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * z;
    acc.re = acc.re + c[i];
  }
  return acc;
}

std::vector<Dyadic> derivative(const std::vector<Dyadic>& c) {
  std::vector<Dyadic> d;
  if (c.size() <= 1) return d;
  d.reserve(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Dyadic(static_cast<long>(i)));
  return d;
}

// Power-of-two bound with |root| < 2^k for every root of every polynomial in
// the materialized neighborhood (leading interval must exclude zero).
long root_bound_log2(const std::vector<DyadicInterval>& cs) {
  Dyadic lead_lo = cs.back().abs_lower();
  long lead_log = lead_lo.log2_upper() - 1;
  long k = 1;
  for (size_t i = 0; i + 1 < cs.size(); ++i) {
    Dyadic up = cs[i].abs_upper();
    if (up.is_zero()) continue;
    k = std::max(k, 1 + up.log2_upper() - lead_log);
  }
  return k;
}

ComplexDyadic perturbation(size_t i, const Dyadic& scale, long prec) {
  Dyadic eps = scale.mul_pow2(-std::max<long>(8, prec / 4));
  return {eps * Dyadic(static_cast<long>(2 * i + 3)), eps * Dyadic(static_cast<long>(i + 1))};
}

Dyadic half_diagonal_upper(const ComplexBox& b, long prec) {
  Dyadic wr = b.re.width().mul_pow2(-1), wi = b.im.width().mul_pow2(-1);
  return (wr * wr + wi * wi).sqrt(prec, RoundDir::Up);
}

}  // namespace

AberthState aberth_initial(const BitstreamPolynomial& g, long prec) {
  AberthState st;
  st.prec = prec;
  int n = g.degree();
  if (n <= 0) return st;
  g.materialize(prec);
  long kb = root_bound_log2(g.coeffs());
  double radius = std::ldexp(0.75, static_cast<int>(std::min<long>(kb, 512)));
  st.z.reserve(n);
  for (int i = 0; i < n; ++i) {
    double theta = (2.0 * M_PI * i) / n + 0.3819660112501051;
    ComplexDyadic z(Dyadic::from_double(radius * std::cos(theta)).round(prec, RoundDir::Down),
                    Dyadic::from_double(radius * std::sin(theta)).round(prec, RoundDir::Down));
    st.z.push_back(z);
  }
  return st;
}

namespace {

AberthState ensure_distinct(AberthState st) {
  for (size_t i = 0; i < st.z.size(); ++i) {
    bool collided = true;
    while (collided) {
      collided = false;
      for (size_t j = 0; j < i; ++j)
        if (st.z[i] == st.z[j]) {
          Dyadic scale = std::max(st.z[i].norm_sq().sqrt(16, RoundDir::Up), Dyadic(1));
          st.z[i] = st.z[i] + perturbation(i, scale, st.prec);
          collided = true;
          break;
        }
    }
  }
  return st;
}

}  // namespace

AberthState aberth_step(const AberthState& state, const std::vector<Dyadic>& median) {
  const long prec = state.prec;
  size_t n = state.z.size();
  std::vector<Dyadic> deriv = derivative(median);
  AberthState out;
  out.prec = prec;
  out.iterations = state.iterations + 1;
  out.z.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const ComplexDyadic& zi = state.z[i];
    ComplexDyadic gz = eval_real_poly(median, zi);
    if (gz.is_zero()) {
      out.z[i] = zi;  // exact roots stay fixed
      continue;
    }
    ComplexDyadic gpz = eval_real_poly(deriv, zi);
    Dyadic scale = std::max(zi.norm_sq().sqrt(16, RoundDir::Up), Dyadic(1));
    if (gpz.is_zero()) {
      out.z[i] = zi + perturbation(i, scale, prec);
      continue;
    }
    ComplexDyadic newton = gz.div(gpz, prec);
    ComplexDyadic sum;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sum = sum + ComplexDyadic(Dyadic(1), Dyadic()).div(zi - state.z[j], prec);
    }
    ComplexDyadic denom = ComplexDyadic(Dyadic(1), Dyadic()) - (newton * sum).round(prec);
    if (denom.is_zero()) {
      out.z[i] = zi + perturbation(i, scale, prec);
      continue;
    }
    out.z[i] = (zi - newton.div(denom, prec)).round(prec);
  }
  return ensure_distinct(std::move(out));
}

RootClusterSet neumaier_clusters(const AberthState& state, const BitstreamPolynomial& g) {
  int n = g.degree();
  const long prec = std::max<long>(state.prec, 53);
  const auto& cs = g.coeffs();
  if (cs.back().contains_zero())
    throw PrecisionError("neumaier_clusters: leading interval coefficient contains zero");
  if (static_cast<int>(state.z.size()) != n)
    throw PreconditionError("neumaier_clusters: approximation count != degree");

  RootClusterSet out;
  out.degree = n;
  out.state = state;
  if (n == 0) return out;

  ComplexBox lead(cs.back(), DyadicInterval());
  DyadicInterval half_n = DyadicInterval::point(Dyadic(static_cast<long>(n)).mul_pow2(-1));
  std::vector<ComplexDyadic> centers(n);
  std::vector<Dyadic> radii(n);
  for (int i = 0; i < n; ++i) {
    const ComplexDyadic& zi = state.z[i];
    ComplexBox num = g.eval_complex(zi);
    ComplexDyadic den(Dyadic(1), Dyadic());
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      den = den * (zi - state.z[j]);
    }
    if (den.is_zero()) throw PreconditionError("neumaier_clusters: approximations not distinct");
    ComplexBox omega = num.div(ComplexBox::point(den), prec);
    ComplexBox r = omega;
    r.re = r.re * half_n;
    r.im = r.im * half_n;
    r = r.div(lead, prec);
    ComplexDyadic rmid(r.re.mid(), r.im.mid());
    centers[i] = zi - rmid;
    radii[i] = half_diagonal_upper(r, prec) + r.abs_upper(prec);
  }

  // Merge discs whose closures may intersect (exact comparison of squared
  // distance against squared radius sum).
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Dyadic d2 = (centers[i] - centers[j]).norm_sq();
      Dyadic rs = radii[i] + radii[j];
      if (d2 <= rs * rs) parent[find(i)] = find(j);
    }

  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[static_cast<size_t>(find(i))].push_back(i);
  for (auto& members : groups) {
    if (members.empty()) continue;
    RootCluster c;
    c.members = members;
    c.multiplicity = static_cast<int>(members.size());
    // Enclosing disc: centroid (rounded) plus covering radius.
    ComplexDyadic sum;
    for (int idx : members) sum = sum + centers[static_cast<size_t>(idx)];
    ComplexDyadic centroid(
        sum.re.div(Dyadic(static_cast<long>(members.size())), prec, RoundDir::Down),
        sum.im.div(Dyadic(static_cast<long>(members.size())), prec, RoundDir::Down));
    Dyadic rad;
    for (int idx : members) {
      Dyadic d = (centers[static_cast<size_t>(idx)] - centroid).norm_sq().sqrt(prec, RoundDir::Up) +
                 radii[static_cast<size_t>(idx)];
      if (d > rad) rad = d;
    }
    c.center = centroid;
    c.radius = rad;
    out.clusters.push_back(std::move(c));
  }
  std::sort(out.clusters.begin(), out.clusters.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.re != b.center.re) return a.center.re < b.center.re;
    return a.center.im < b.center.im;
  });
  return out;
}

SolveResult certified_solve(const BitstreamPolynomial& g, int target_count,
                            const SolveBudget& budget, const StageObserver& observer) {
  int n = g.degree();
  if (target_count < 0 || target_count > n)
    throw PreconditionError("certified_solve: target count out of range");
  SolveResult result;
  result.clusters.degree = n;
  if (n == 0) {
    result.success = (target_count == 0);
    result.clusters.isolating = result.success;
    return result;
  }

  long prec = budget.initial_prec;
  g.materialize(prec);
  int stage = 0;
  while (g.coeffs().back().contains_zero()) {
    if (++stage > budget.max_stages) {
      result.success = false;
      return result;
    }
    prec *= 2;
    g.materialize(prec);
  }

  AberthState state = aberth_initial(g, prec);
  for (; stage <= budget.max_stages; ++stage) {
    std::vector<Dyadic> median = g.median();
    int sweeps = budget.sweeps_factor * n;
    for (int s = 0; s < sweeps; ++s) state = aberth_step(state, median);
    RootClusterSet clusters = neumaier_clusters(state, g);
    if (observer) observer(clusters);
    if (static_cast<int>(clusters.clusters.size()) == target_count) {
      clusters.isolating = true;
      result.clusters = std::move(clusters);
      result.success = true;
      return result;
    }
    result.clusters = std::move(clusters);
    // Stagnation test: residual indistinguishable from zero at current
    // precision -> square mu for the next stage.
    bool ambiguous = false;
    for (const auto& z : state.z)
      if (g.eval_complex(z).contains_zero()) {
        ambiguous = true;
        break;
      }
    if (ambiguous) {
      prec *= 2;
      g.materialize(prec);
      state.prec = prec;
    }
  }
  result.success = false;
  return result;
}

namespace {

bool conjugate_separated(const RootClusterSet& set) {
  const auto& cl = set.clusters;
  for (size_t i = 0; i < cl.size(); ++i) {
    DyadicInterval im_range(cl[i].center.im - cl[i].radius, cl[i].center.im + cl[i].radius);
    if (!im_range.contains_zero()) continue;  // misses the real axis
    for (size_t j = 0; j < cl.size(); ++j) {
      if (i == j) continue;
      Dyadic d2 = (cl[i].center.conj() - cl[j].center).norm_sq();
      Dyadic rs = cl[i].radius + cl[j].radius;
      if (d2 <= rs * rs) return false;
    }
  }
  // Real-axis clusters must also have strictly disjoint x-projections.
  std::vector<std::pair<Dyadic, Dyadic>> spans;
  for (const auto& c : cl) {
    DyadicInterval im_range(c.center.im - c.radius, c.center.im + c.radius);
    if (im_range.contains_zero()) spans.emplace_back(c.center.re - c.radius, c.center.re + c.radius);
  }
  std::sort(spans.begin(), spans.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < spans.size(); ++i)
    if (!(spans[i].second < spans[i + 1].first)) return false;
  return true;
}

}  // namespace

ClusterRootRefiner::ClusterRootRefiner(BitstreamPolynomial stream, RootClusterSet clusters,
                                       SolveBudget budget)
    : stream_(std::move(stream)), set_(std::move(clusters)), budget_(budget) {
  size_t m = set_.clusters.size();
  for (int attempt = 0; attempt <= budget_.max_stages + 2; ++attempt) {
    if (set_.clusters.size() == m && recompute()) {
      ok_ = true;
      return;
    }
    escalate();
  }
}

bool ClusterRootRefiner::recompute() {
  if (!conjugate_separated(set_)) return false;
  reals_.clear();
  for (const auto& c : set_.clusters) {
    DyadicInterval im_range(c.center.im - c.radius, c.center.im + c.radius);
    if (!im_range.contains_zero()) continue;
    reals_.emplace_back(DyadicInterval(c.center.re - c.radius, c.center.re + c.radius),
                        c.multiplicity);
  }
  std::sort(reals_.begin(), reals_.end(),
            [](const auto& a, const auto& b) { return a.first.lo() < b.first.lo(); });
  return true;
}

void ClusterRootRefiner::escalate() {
  int n = stream_.degree();
  long prec = std::max(set_.state.prec, budget_.initial_prec) * 2;
  stream_.materialize(prec);
  AberthState state = set_.state;
  state.prec = prec;
  std::vector<Dyadic> median = stream_.median();
  int sweeps = budget_.sweeps_factor * std::max(n, 1);
  for (int s = 0; s < sweeps; ++s) state = aberth_step(state, median);
  set_ = neumaier_clusters(state, stream_);
}

void ClusterRootRefiner::refine_below(size_t i, const Dyadic& width) {
  if (!ok_) throw PrecisionError("ClusterRootRefiner: refiner is not in a usable state");
  size_t m = set_.clusters.size();
  int guard = 0;
  while (interval(i).width() > width) {
    if (++guard > 64) throw PrecisionError("ClusterRootRefiner: refinement stalled");
    escalate();
    if (set_.clusters.size() != m || !recompute())
      continue;  // separation temporarily lost; escalate again
  }
}

RealRootList extract_real_roots(const RootClusterSet& clusters, const BitstreamPolynomial& g,
                                const SolveBudget& budget) {
  RealRootList out;
  RootClusterSet current = clusters;
  int n = g.degree();
  if (n == 0 || current.clusters.empty()) {
    out.success = true;
    return out;
  }
  long prec = std::max(current.state.prec, budget.initial_prec);
  AberthState state = current.state;
  size_t m = current.clusters.size();
  for (int attempt = 0; attempt <= budget.max_stages + 2; ++attempt) {
    if (current.clusters.size() == m && conjugate_separated(current)) {
      for (const auto& c : current.clusters) {
        DyadicInterval im_range(c.center.im - c.radius, c.center.im + c.radius);
        if (!im_range.contains_zero()) continue;
        out.roots.emplace_back(DyadicInterval(c.center.re - c.radius, c.center.re + c.radius),
                               c.multiplicity);
      }
      std::sort(out.roots.begin(), out.roots.end(),
                [](const auto& a, const auto& b) { return a.first.lo() < b.first.lo(); });
      out.success = true;
      return out;
    }
    prec *= 2;
    g.materialize(prec);
    state.prec = prec;
    std::vector<Dyadic> median = g.median();
    int sweeps = budget.sweeps_factor * n;
    for (int s = 0; s < sweeps; ++s) state = aberth_step(state, median);
    current = neumaier_clusters(state, g);
  }
  out.success = false;
  out.roots.clear();
  return out;
}

}  // namespace curvetop
