#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvetop/numcert.hpp"
#include "oracles.hpp"

using namespace curvetop;

namespace {

Dyadic abs_err_to(const ComplexDyadic& z, double re, double im) {
  ComplexDyadic target(Dyadic::from_double(re), Dyadic::from_double(im));
  return (z - target).norm_sq().sqrt(30, RoundDir::Up);
}

bool cluster_contains_rat(const RootCluster& c, const BigRat& re) {
  BigRat lo = (c.center.re - c.radius).to_rational();
  BigRat hi = (c.center.re + c.radius).to_rational();
  BigRat ilo = (c.center.im - c.radius).to_rational();
  BigRat ihi = (c.center.im + c.radius).to_rational();
  return lo <= re && re <= hi && ilo <= 0 && 0 <= ihi;
}

int mult_sum(const RootClusterSet& s) {
  int t = 0;
  for (const auto& c : s.clusters) t += c.multiplicity;
  return t;
}

}  // namespace

TEST_CASE("aberth_step moves both guesses strictly toward the roots of y^2-1") {
  AberthState st;
  st.prec = 64;
  st.z = {ComplexDyadic(Dyadic(2), Dyadic()), ComplexDyadic(Dyadic(-2), Dyadic())};
  std::vector<Dyadic> median = {Dyadic(-1), Dyadic(0), Dyadic(1)};
  AberthState next = aberth_step(st, median);
  // Hand evaluation at z=2: g/g' = 3/4, sum = 1/4, denominator 13/16,
  // correction 12/13, z' = 14/13.
  CHECK(abs_err_to(next.z[0], 14.0 / 13.0, 0.0) <= Dyadic::pow2(-30));
  CHECK(abs_err_to(next.z[1], -14.0 / 13.0, 0.0) <= Dyadic::pow2(-30));
  CHECK(abs_err_to(next.z[0], 1.0, 0.0) < abs_err_to(st.z[0], 1.0, 0.0));
}

TEST_CASE("aberth_step keeps exact roots fixed") {
  AberthState st;
  st.prec = 64;
  st.z = {ComplexDyadic(Dyadic(1), Dyadic()), ComplexDyadic(Dyadic(-2), Dyadic())};
  std::vector<Dyadic> median = {Dyadic(-1), Dyadic(0), Dyadic(1)};
  AberthState next = aberth_step(st, median);
  CHECK(next.z[0] == st.z[0]);
}

TEST_CASE("aberth_step on a double root approaches without merging") {
  AberthState st;
  st.prec = 96;
  st.z = {ComplexDyadic(Dyadic(1), Dyadic()), ComplexDyadic(Dyadic(-1), Dyadic())};
  std::vector<Dyadic> median = {Dyadic(0), Dyadic(0), Dyadic(1)};  // y^2
  for (int i = 0; i < 20; ++i) {
    st = aberth_step(st, median);
    CHECK(!(st.z[0] == st.z[1]));
  }
  CHECK(abs_err_to(st.z[0], 0.0, 0.0) < Dyadic(BigInt(1), -2));
  CHECK(abs_err_to(st.z[1], 0.0, 0.0) < Dyadic(BigInt(1), -2));
}

TEST_CASE("neumaier_clusters: exact guesses give zero-radius singletons") {
  auto g = BitstreamPolynomial::from_exact(UPoly({-1, 0, 1}));
  g.materialize(64);
  AberthState st;
  st.prec = 64;
  st.z = {ComplexDyadic(Dyadic(1), Dyadic()), ComplexDyadic(Dyadic(-1), Dyadic())};
  auto set = neumaier_clusters(st, g);
  REQUIRE(set.clusters.size() == 2);
  for (const auto& c : set.clusters) {
    CHECK(c.multiplicity == 1);
    CHECK(c.radius.is_zero());
  }
  CHECK(mult_sum(set) == 2);
}

TEST_CASE("neumaier_clusters: close guesses at a double root merge into one cluster") {
  // (y-1)^2 with guesses 1 +/- 2^-10
  auto g = BitstreamPolynomial::from_exact(UPoly({1, -2, 1}));
  g.materialize(64);
  AberthState st;
  st.prec = 64;
  st.z = {ComplexDyadic(Dyadic(1) + Dyadic::pow2(-10), Dyadic()),
          ComplexDyadic(Dyadic(1) - Dyadic::pow2(-10), Dyadic())};
  auto set = neumaier_clusters(st, g);
  REQUIRE(set.clusters.size() == 1);
  CHECK(set.clusters[0].multiplicity == 2);
  CHECK(cluster_contains_rat(set.clusters[0], BigRat(1)));
}

TEST_CASE("neumaier_clusters: sqrt(2) guesses give two enclosing clusters") {
  auto g = BitstreamPolynomial::from_exact(UPoly({-2, 0, 1}));
  g.materialize(64);
  AberthState st;
  st.prec = 64;
  st.z = {ComplexDyadic(Dyadic::from_double(1.414), Dyadic()),
          ComplexDyadic(Dyadic::from_double(-1.414), Dyadic())};
  auto set = neumaier_clusters(st, g);
  REQUIRE(set.clusters.size() == 2);
  // Each cluster must contain the true root: check |center^2 - 2| <= spread.
  for (const auto& c : set.clusters) {
    CHECK(c.multiplicity == 1);
    BigRat lo = (c.center.re.abs() - c.radius).to_rational();
    BigRat hi = (c.center.re.abs() + c.radius).to_rational();
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
  }
}

TEST_CASE("neumaier_clusters errors when the leading coefficient straddles zero") {
  // Leading coefficient 2^-100: indistinguishable from zero at 8 bits.
  BigRat tiny(BigInt(1), BigInt(1) << 100);
  auto g = BitstreamPolynomial::from_rational({BigRat(1), tiny});
  g.materialize(8);
  AberthState st;
  st.prec = 53;
  st.z = {ComplexDyadic(Dyadic(0), Dyadic())};
  CHECK_THROWS_AS(neumaier_clusters(st, g), PrecisionError);
}

TEST_CASE("certified_solve: cusp fiber y^2 with target 1") {
  auto g = BitstreamPolynomial::from_exact(UPoly({0, 0, 1}));
  auto res = certified_solve(g, 1);
  REQUIRE(res.success);
  REQUIRE(res.clusters.clusters.size() == 1);
  CHECK(res.clusters.clusters[0].multiplicity == 2);
  CHECK(res.clusters.isolating);
  CHECK(cluster_contains_rat(res.clusters.clusters[0], BigRat(0)));
}

TEST_CASE("certified_solve: simple pair y^2-1 with target 2") {
  auto g = BitstreamPolynomial::from_exact(UPoly({-1, 0, 1}));
  auto res = certified_solve(g, 2);
  REQUIRE(res.success);
  CHECK(res.clusters.clusters.size() == 2);
  CHECK(mult_sum(res.clusters) == 2);
}

TEST_CASE("certified_solve + extract: conjugate pair y^2+1 has no real roots") {
  auto g = BitstreamPolynomial::from_exact(UPoly({1, 0, 1}));
  auto res = certified_solve(g, 2);
  REQUIRE(res.success);
  auto real = extract_real_roots(res.clusters, g);
  REQUIRE(real.success);
  CHECK(real.roots.empty());
}

TEST_CASE("extract_real_roots: y^2-1 gives two simple real roots") {
  auto g = BitstreamPolynomial::from_exact(UPoly({-1, 0, 1}));
  auto res = certified_solve(g, 2);
  REQUIRE(res.success);
  auto real = extract_real_roots(res.clusters, g);
  REQUIRE(real.success);
  REQUIRE(real.roots.size() == 2);
  CHECK(real.roots[0].second == 1);
  CHECK(real.roots[1].second == 1);
  CHECK(real.roots[0].first.lo().to_rational() <= -1);
  CHECK(real.roots[0].first.hi().to_rational() >= -1);
  CHECK(real.roots[1].first.disjoint(real.roots[0].first));
}

TEST_CASE("extract_real_roots: multiplicity bookkeeping for y^2(y-1)") {
  auto g = BitstreamPolynomial::from_exact(UPoly({0, 0, -1, 1}) * UPoly({1}));
  auto res = certified_solve(g, 2);
  REQUIRE(res.success);
  auto real = extract_real_roots(res.clusters, g);
  REQUIRE(real.success);
  REQUIRE(real.roots.size() == 2);
  CHECK(real.roots[0].second == 2);
  CHECK(real.roots[1].second == 1);
  CHECK(real.roots[0].first.lo().to_rational() <= 0);
  CHECK(real.roots[1].first.hi().to_rational() >= 1);
}

TEST_CASE("certified_solve fails soundly when the target is unreachable") {
  // y^2 has one distinct root; target 2 can never be certified.
  auto g = BitstreamPolynomial::from_exact(UPoly({0, 0, 1}));
  SolveBudget tight;
  tight.max_stages = 2;
  auto res = certified_solve(g, 2, tight);
  CHECK(!res.success);
  CHECK(!res.clusters.isolating);
  CHECK(mult_sum(res.clusters) == 2);  // soundness is kept on failure
}

TEST_CASE("determinism: identical runs give identical clusters") {
  auto run = [] {
    auto g = BitstreamPolynomial::from_exact(UPoly({-6, 1, 4, 1}));
    auto res = certified_solve(g, 3);
    std::string repr;
    for (const auto& c : res.clusters.clusters)
      repr += c.center.re.to_string() + "|" + c.center.im.to_string() + "|" +
              c.radius.to_string() + ";";
    return repr;
  };
  CHECK(run() == run());
}
