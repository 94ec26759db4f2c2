#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvetop/bipoly.hpp"
#include "oracles.hpp"

using namespace curvetop;
using oracles::bp;

TEST_CASE("dyadic arithmetic is exact and normalized") {
  Dyadic a(BigInt(6), -1);  // 3
  CHECK(a.mantissa() == 3);
  CHECK(a.exponent() == 0);
  Dyadic b = Dyadic::pow2(-3);
  CHECK((a + b).to_rational() == BigRat(25, 8));
  CHECK((a * b).to_rational() == BigRat(3, 8));
  CHECK((a - a).is_zero());
  CHECK(Dyadic::midpoint(Dyadic(1), Dyadic(2)).to_rational() == BigRat(3, 2));
}

TEST_CASE("directed rounding brackets the true value") {
  BigRat q(1, 3);
  for (long prec : {4L, 16L, 53L}) {
    Dyadic lo = Dyadic::from_rational(q, prec, RoundDir::Down);
    Dyadic hi = Dyadic::from_rational(q, prec, RoundDir::Up);
    CHECK(lo.to_rational() <= q);
    CHECK(hi.to_rational() >= q);
    CHECK((hi - lo).to_rational() <= BigRat(1, 1L << (prec - 2)));
  }
  Dyadic alo = Dyadic::from_rational_abs(BigRat(-7, 3), 20, RoundDir::Down);
  Dyadic ahi = Dyadic::from_rational_abs(BigRat(-7, 3), 20, RoundDir::Up);
  CHECK(alo.to_rational() <= BigRat(-7, 3));
  CHECK(ahi.to_rational() >= BigRat(-7, 3));
  CHECK((ahi - alo) <= Dyadic::pow2(-20));
}

TEST_CASE("dyadic sqrt and div are directed") {
  Dyadic two(2);
  Dyadic lo = two.sqrt(40, RoundDir::Down), hi = two.sqrt(40, RoundDir::Up);
  CHECK(lo * lo <= two);
  CHECK(hi * hi >= two);
  Dyadic q_lo = Dyadic(1).div(Dyadic(3), 30, RoundDir::Down);
  Dyadic q_hi = Dyadic(1).div(Dyadic(3), 30, RoundDir::Up);
  CHECK(q_lo.to_rational() <= BigRat(1, 3));
  CHECK(q_hi.to_rational() >= BigRat(1, 3));
}

TEST_CASE("interval multiplication covers products") {
  DyadicInterval a(Dyadic(-1), Dyadic(2));
  DyadicInterval b(Dyadic(-3), Dyadic(1));
  DyadicInterval p = a * b;
  CHECK(p.lo() <= Dyadic(-6));
  CHECK(p.hi() >= Dyadic(3));
  CHECK(a.square().lo() == Dyadic(0));
}

TEST_CASE("derive: power rule examples") {
  BPoly parab = bp({{0, 2, 1}, {1, 0, -1}});  // y^2 - x
  CHECK(derive(parab, Var::Y, 1) == bp({{0, 1, 2}}));
  BPoly cub = bp({{0, 3, 1}, {2, 0, -1}});  // y^3 - x^2
  CHECK(derive(cub, Var::Y, 2) == bp({{0, 1, 6}}));
  BPoly circle = bp({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
  CHECK(derive(circle, Var::X, 1) == bp({{1, 0, 2}}));
  CHECK(derive(circle, Var::Y, 0) == circle);
}

TEST_CASE("content_y examples") {
  CHECK(content_y(bp({{1, 2, 1}, {2, 0, -1}})) == UPoly({0, 1}));          // x*y^2 - x^2 -> x
  CHECK(content_y(bp({{0, 2, 1}, {1, 0, -1}})) == UPoly({1}));             // y^2 - x -> 1
  CHECK(content_y(bp({{1, 1, 1}, {0, 1, -1}, {2, 0, 1}, {1, 0, -1}})) ==  // (x-1)y + (x-1)x
        UPoly({-1, 1}));
  CHECK_THROWS_AS(content_y(BPoly::zero()), PreconditionError);
}

TEST_CASE("eval_box examples and properties") {
  BPoly circle = bp({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
  Box origin{DyadicInterval::point(Dyadic(0)), DyadicInterval::point(Dyadic(0))};
  DyadicInterval v = eval_box(circle, origin);
  CHECK(v.lo() == Dyadic(-1));
  CHECK(v.hi() == Dyadic(-1));

  BPoly xy = bp({{1, 1, 1}});
  Box unit{DyadicInterval(Dyadic(0), Dyadic(1)), DyadicInterval(Dyadic(0), Dyadic(1))};
  DyadicInterval r = eval_box(xy, unit);
  CHECK(r.lo() <= Dyadic(0));
  CHECK(r.hi() >= Dyadic(1));

  BPoly parab = bp({{0, 2, 1}, {1, 0, -1}});
  Box b{DyadicInterval(Dyadic(0), Dyadic(1)), DyadicInterval(Dyadic(-1), Dyadic(1))};
  DyadicInterval pr = eval_box(parab, b);
  CHECK(pr.lo() <= Dyadic(-1));  // exact range is [-1, 1]
  CHECK(pr.hi() >= Dyadic(1));
}

TEST_CASE("eval_box contains exact values at random point boxes") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dc(-8, 8);
  for (int t = 0; t < 200; ++t) {
    BPoly p = oracles::random_bipoly(rng, 4, 20);
    BigRat cx(dc(rng), 4), cy(dc(rng), 4);
    Dyadic dx = Dyadic(BigInt(cx.get_num()), -2), dy = Dyadic(BigInt(cy.get_num()), -2);
    Box b{DyadicInterval::point(dx), DyadicInterval::point(dy)};
    DyadicInterval v = eval_box(p, b);
    BigRat exact = p.eval(cx, cy);
    CHECK(v.lo().to_rational() <= exact);
    CHECK(v.hi().to_rational() >= exact);
  }
}

TEST_CASE("eval_box inclusion monotonicity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dc(-6, 6);
  for (int t = 0; t < 100; ++t) {
    BPoly p = oracles::random_bipoly(rng, 4, 12);
    Dyadic ax(dc(rng)), ay(dc(rng));
    DyadicInterval big_x(ax - Dyadic(2), ax + Dyadic(2)), small_x(ax - Dyadic(1), ax + Dyadic(1));
    DyadicInterval big_y(ay - Dyadic(2), ay + Dyadic(2)), small_y(ay - Dyadic(1), ay + Dyadic(1));
    DyadicInterval inner = eval_box(p, {small_x, small_y});
    DyadicInterval outer = eval_box(p, {big_x, big_y});
    CHECK(outer.contains(inner));
  }
}

TEST_CASE("content divides every y-coefficient") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    BPoly p = oracles::random_bipoly(rng, 5, 30);
    UPoly h = content_y(p);
    for (const auto& fi : p.y_coeffs()) {
      if (fi.is_zero()) continue;
      CHECK_NOTHROW((void)fi.divexact(h));
    }
  }
}

TEST_CASE("specialize_x examples") {
  BPoly circle = bp({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
  CHECK(specialize_x(circle, BigRat(0)).poly == UPoly({-1, 0, 1}));

  BPoly hyper = bp({{1, 1, 1}, {0, 0, -1}});
  auto sp = specialize_x(hyper, BigRat(0));
  CHECK(sp.poly.degree() == 0);
  CHECK(sp.poly.coeff(0) == -1);

  BPoly parab = bp({{0, 2, 1}, {1, 0, -1}});
  auto sq = specialize_x(parab, BigRat(1, 4));
  CHECK(sq.poly == UPoly({-1, 0, 4}));
}

TEST_CASE("specialize and derive commute up to the recorded scale") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> dn(-9, 9);
  std::uniform_int_distribution<long> dd(1, 5);
  for (int t = 0; t < 100; ++t) {
    BPoly p = oracles::random_bipoly(rng, 5, 25);
    BigRat q(dn(rng), dd(rng));
    q.canonicalize();
    auto lhs = specialize_x(derive(p, Var::Y, 1), q);
    auto rhs_spec = specialize_x(p, q);
    UPoly rhs = rhs_spec.poly.derivative();
    if (lhs.poly.is_zero()) {
      CHECK(rhs.is_zero());
      continue;
    }
    // Equal up to a positive rational unit: cross-check primitive parts.
    CHECK(lhs.poly.primitive_positive() == rhs.primitive_positive());
  }
}

TEST_CASE("bivariate division round trips") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    BPoly a = oracles::random_bipoly(rng, 3, 10);
    BPoly b = oracles::random_bipoly(rng, 3, 10);
    BPoly prod = a * b;
    CHECK(divexact(prod, b) == a);
  }
}
