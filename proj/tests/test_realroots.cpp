#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvetop/elim.hpp"
#include "curvetop/realroots.hpp"
#include "oracles.hpp"

using namespace curvetop;

namespace {

bool interval_contains_rat(const DyadicInterval& iv, const BigRat& q) {
  return iv.lo().to_rational() <= q && q <= iv.hi().to_rational();
}

}  // namespace

TEST_CASE("descartes_isolate: worked examples") {
  {
    auto roots = descartes_isolate(UPoly({-2, 0, 1}));  // x^2 - 2
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].interval().hi().sign() < 0);
    CHECK(roots[1].interval().lo().sign() > 0);
  }
  CHECK(descartes_isolate(UPoly({1, 0, 1})).empty());  // x^2 + 1
  {
    auto roots = descartes_isolate(UPoly({-4, 0, 4}));  // 4x^2 - 4
    REQUIRE(roots.size() == 2);
    CHECK(compare_to_rational(roots[0], BigRat(-1)) == Order::Equal);
    CHECK(compare_to_rational(roots[1], BigRat(1)) == Order::Equal);
  }
  CHECK_THROWS_AS(descartes_isolate(UPoly({1, -2, 1})), PreconditionError);  // (x-1)^2
  CHECK_THROWS_AS(descartes_isolate(UPoly()), PreconditionError);
}

TEST_CASE("descartes_isolate: exact dyadic roots and tight clusters") {
  // (x-1)(x-2)(x+3), roots at subdivision-friendly integers
  UPoly p = UPoly({-1, 1}) * UPoly({-2, 1}) * UPoly({3, 1});
  auto roots = descartes_isolate(p);
  REQUIRE(roots.size() == 3);
  CHECK(compare_to_rational(roots[0], BigRat(-3)) == Order::Equal);
  CHECK(compare_to_rational(roots[1], BigRat(1)) == Order::Equal);
  CHECK(compare_to_rational(roots[2], BigRat(2)) == Order::Equal);
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    CHECK(roots[i].interval().disjoint(roots[i + 1].interval()));

  // Mignotte-style close roots
  UPoly close = UPoly({-1, 100, -1, -10000, 100, 10000});
  if (gcd_univariate(close, close.derivative()).degree() == 0) {
    auto r2 = descartes_isolate(close);
    CHECK(static_cast<int>(r2.size()) == oracles::sturm_count_all(close));
  }
}

TEST_CASE("descartes vs sturm on random square-free polynomials") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    UPoly p = oracles::random_squarefree_upoly(rng, 8, 100);
    auto roots = descartes_isolate(p);
    CHECK(static_cast<int>(roots.size()) == oracles::sturm_count_all(p));
    for (const auto& r : roots) {
      CHECK(oracles::sturm_count(p, r.interval().lo().to_rational(),
                                 r.interval().hi().to_rational()) == 1);
      int slo = p.sign_at(r.interval().lo().to_rational());
      int shi = p.sign_at(r.interval().hi().to_rational());
      CHECK(slo * shi < 0);
    }
    for (size_t i = 0; i + 1 < roots.size(); ++i)
      CHECK(roots[i].interval().disjoint(roots[i + 1].interval()));
  }
}

TEST_CASE("refine: worked examples") {
  {
    auto roots = descartes_isolate(UPoly({-2, 0, 1}));
    AlgebraicNumber r = refine(roots[1], Dyadic::pow2(-2));
    CHECK(r.interval().width() <= Dyadic::pow2(-2));
    CHECK(interval_contains_rat(r.interval(), BigRat(14142, 10000)));
  }
  {
    AlgebraicNumber one(UPoly({-1, 1}), DyadicInterval(Dyadic(0), Dyadic(2)));
    AlgebraicNumber r = refine(one, Dyadic::pow2(-20));
    CHECK(r.interval().width() <= Dyadic::pow2(-20));
    CHECK(interval_contains_rat(r.interval(), BigRat(1)));
  }
  {
    auto roots = descartes_isolate(UPoly({-2, 0, 0, 1}));  // x^3 - 2
    REQUIRE(roots.size() == 1);
    AlgebraicNumber r = refine(roots[0], Dyadic::pow2(-10));
    CHECK(interval_contains_rat(r.interval(), BigRat(12599, 10000)));
  }
}

TEST_CASE("refine never loses the root") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    UPoly p = oracles::random_squarefree_upoly(rng, 6, 40);
    for (auto& r : descartes_isolate(p)) {
      BigRat lo0 = r.interval().lo().to_rational(), hi0 = r.interval().hi().to_rational();
      r.refine_below(Dyadic::pow2(-40));
      CHECK(oracles::sturm_count(p, r.interval().lo().to_rational(),
                                 r.interval().hi().to_rational()) == 1);
      CHECK(r.interval().lo().to_rational() >= lo0);
      CHECK(r.interval().hi().to_rational() <= hi0);
    }
  }
}

TEST_CASE("compare: worked examples") {
  UPoly x2m2({-2, 0, 1});
  AlgebraicNumber a(x2m2, DyadicInterval(Dyadic(1), Dyadic(2)));
  AlgebraicNumber b(x2m2, DyadicInterval(Dyadic(BigInt(11), -3), Dyadic(BigInt(3), -1)));
  CHECK(compare(a, b) == Order::Equal);  // both are sqrt(2): (1,2) vs (1.375, 1.5)
  CHECK(compare_to_rational(a, BigRat(3, 2)) == Order::Less);
  AlgebraicNumber neg(x2m2, DyadicInterval(Dyadic(-2), Dyadic(-1)));
  CHECK(compare(neg, a) == Order::Less);
}

TEST_CASE("compare is a total order on random algebraic triples") {
  std::mt19937_64 rng(33);
  std::vector<AlgebraicNumber> pool;
  while (pool.size() < 24) {
    UPoly p = oracles::random_squarefree_upoly(rng, 6, 30);
    for (auto& r : descartes_isolate(p)) pool.push_back(r);
  }
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    Order ab = compare(a, b), ba = compare(b, a);
    CHECK(((ab == Order::Equal && ba == Order::Equal) ||
           (ab == Order::Less && ba == Order::Greater) ||
           (ab == Order::Greater && ba == Order::Less)));
    if (ab != Order::Greater && compare(b, c) != Order::Greater)
      CHECK(compare(a, c) != Order::Greater);
  }
}

TEST_CASE("bitstream descartes: exact stream reduces to plain isolation") {
  auto stream = BitstreamPolynomial::from_exact(UPoly({-1, 0, 1}));  // y^2 - 1
  auto ivs = bitstream_isolate_simple(stream, {});
  REQUIRE(ivs.size() == 2);
  CHECK(interval_contains_rat(ivs[0], BigRat(-1)));
  CHECK(interval_contains_rat(ivs[1], BigRat(1)));
}

TEST_CASE("bitstream descartes: y(y^2-2) has three simple roots") {
  auto stream = BitstreamPolynomial::from_exact(UPoly({0, -2, 0, 1}));
  auto ivs = bitstream_isolate_simple(stream, {});
  REQUIRE(ivs.size() == 3);
  CHECK(interval_contains_rat(ivs[1], BigRat(0)));
  for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].disjoint(ivs[i + 1]));
}

TEST_CASE("bitstream descartes: multiple-root interval suppresses the double root") {
  auto stream = BitstreamPolynomial::from_exact(UPoly({0, 0, 1}));  // y^2
  MultipleRootInterval m{DyadicInterval(Dyadic(BigInt(-1), -3), Dyadic(BigInt(1), -3)), 2, -1};
  auto ivs = bitstream_isolate_simple(stream, {m});
  CHECK(ivs.empty());
}

TEST_CASE("bitstream descartes: simple roots coexist with covered multiples") {
  // y^2 (y-1) (y+2): double root at 0 covered, simple roots at 1 and -2.
  UPoly p = UPoly({0, 0, 1}) * UPoly({-1, 1}) * UPoly({2, 1});
  auto stream = BitstreamPolynomial::from_exact(p);
  MultipleRootInterval m{DyadicInterval(Dyadic(BigInt(-1), -4), Dyadic(BigInt(1), -4)), 2, -1};
  auto ivs = bitstream_isolate_simple(stream, {m});
  REQUIRE(ivs.size() == 2);
  CHECK(interval_contains_rat(ivs[0], BigRat(-2)));
  CHECK(interval_contains_rat(ivs[1], BigRat(1)));
  for (const auto& iv : ivs) CHECK(iv.disjoint(m.interval));
}

TEST_CASE("bitstream descartes: interval-coefficient stream with irrational limit") {
  // Coefficients of (y^2 - 2)(y - 1/3) delivered only through interval
  // approximations of the rational values.
  std::vector<BigRat> cs = {BigRat(2, 3), BigRat(-2), BigRat(-1, 3), BigRat(1)};
  auto stream = BitstreamPolynomial::from_rational(cs);
  auto ivs = bitstream_isolate_simple(stream, {});
  REQUIRE(ivs.size() == 3);
  CHECK(interval_contains_rat(ivs[1], BigRat(1, 3)));
  auto tight = bitstream_refine_root(stream, ivs[1], Dyadic::pow2(-30));
  CHECK(interval_contains_rat(tight, BigRat(1, 3)));
  CHECK(tight.width() <= Dyadic::pow2(-30));
}

TEST_CASE("bitstream vs sturm on random rational fibers") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 40; ++t) {
    UPoly p = oracles::random_squarefree_upoly(rng, 7, 50);
    auto stream = BitstreamPolynomial::from_exact(p);
    auto ivs = bitstream_isolate_simple(stream, {});
    CHECK(static_cast<int>(ivs.size()) == oracles::sturm_count_all(p));
    for (const auto& iv : ivs)
      CHECK(oracles::sturm_count(p, iv.lo().to_rational(), iv.hi().to_rational()) == 1);
  }
}

TEST_CASE("interval sign variations: bounds collapse for point intervals") {
  std::vector<DyadicInterval> cs = {DyadicInterval::point(Dyadic(1)),
                                    DyadicInterval::point(Dyadic(-2)),
                                    DyadicInterval::point(Dyadic(3))};
  auto [l, u] = interval_sign_variations(cs);
  CHECK(l == 2);
  CHECK(u == 2);
  cs.push_back(DyadicInterval(Dyadic(-1), Dyadic(1)));
  auto [l2, u2] = interval_sign_variations(cs);
  CHECK(l2 == 2);
  CHECK(u2 == 3);
}
