#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvetop/elim.hpp"
#include "curvetop/realroots.hpp"
#include "oracles.hpp"

using namespace curvetop;
using oracles::bp;

TEST_CASE("resultant: worked examples against known determinants") {
  BPoly parab = bp({{0, 2, 1}, {1, 0, -1}});
  BPoly two_y = bp({{0, 1, 2}});
  CHECK(resultant(parab, two_y, Var::Y) == UPoly({0, -4}));  // -4x

  BPoly circle = bp({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
  CHECK(resultant(circle, two_y, Var::Y) == UPoly({-4, 0, 4}));  // 4x^2 - 4

  BPoly cusp = bp({{0, 2, 1}, {3, 0, -1}});
  CHECK(resultant(cusp, two_y, Var::Y) == UPoly({0, 0, 0, -4}));  // -4x^3
}

TEST_CASE("resultant conventions") {
  BPoly hyper = bp({{1, 1, 1}, {0, 0, -1}});  // xy - 1
  BPoly fy = bp({{1, 0, 1}});                 // x (degree 0 in y)
  CHECK(resultant(hyper, fy, Var::Y) == UPoly({0, 1}));  // x^1
  CHECK(resultant(fy, fy, Var::Y) == UPoly({1}));        // both degree 0 -> 1
  CHECK(resultant(hyper, BPoly::zero(), Var::Y).is_zero());
  CHECK_THROWS_AS(resultant(BPoly::zero(), BPoly::zero(), Var::Y), PreconditionError);
}

TEST_CASE("resultant equals the Sylvester determinant on random pairs") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 120) {
    BPoly p = oracles::random_bipoly(rng, 4, 50);
    BPoly q = oracles::random_bipoly(rng, 4, 50);
    if (p.degree_y() < 1 || q.degree_y() < 1) continue;
    CHECK(resultant(p, q, Var::Y) == oracles::sylvester_resultant_y(p, q));
    ++done;
  }
}

TEST_CASE("resultant vanishes iff the inputs share a positive-degree factor") {
  std::mt19937_64 rng(22);
  int done = 0;
  while (done < 40) {
    BPoly a = oracles::random_bipoly(rng, 2, 6);
    BPoly b = oracles::random_bipoly(rng, 2, 6);
    BPoly c = oracles::random_bipoly(rng, 2, 6);
    if (c.degree_y() < 1) continue;
    UPoly r = resultant(a * c, b * c, Var::Y);
    CHECK(r.is_zero());
    ++done;
  }
  // And on the generic pairs from the previous case, zero resultant implies a
  // common factor detectable by the bivariate gcd.
  done = 0;
  while (done < 40) {
    BPoly p = oracles::random_bipoly(rng, 3, 10);
    BPoly q = oracles::random_bipoly(rng, 3, 10);
    if (p.degree_y() < 1 || q.degree_y() < 1) continue;
    UPoly r = resultant(p, q, Var::Y);
    BPoly g = gcd_bivariate(p, q);
    CHECK((r.is_zero()) == (g.degree_y() >= 1));
    ++done;
  }
}

TEST_CASE("resultant eliminating x via variable swap") {
  BPoly parab = bp({{0, 2, 1}, {1, 0, -1}});  // y^2 - x
  BPoly line = bp({{1, 0, 1}, {0, 1, -1}});   // x - y
  // res_x(y^2 - x, x - y) = value of y^2 - x at x = y, up to sign: y^2 - y.
  UPoly r = resultant(parab, line, Var::X);
  CHECK(r.primitive_positive() == UPoly({0, -1, 1}));
}

TEST_CASE("yun square-free factorization: worked examples") {
  {
    auto sf = yun_squarefree(UPoly({0, 0, 1, 1}));  // x^3 + x^2 = (x+1) * x^2
    REQUIRE(sf.factors.size() == 2);
    CHECK(sf.factors[0].poly == UPoly({1, 1}));
    CHECK(sf.factors[0].multiplicity == 1);
    CHECK(sf.factors[1].poly == UPoly({0, 1}));
    CHECK(sf.factors[1].multiplicity == 2);
  }
  {
    auto sf = yun_squarefree(UPoly({-2, 0, 1}));  // already square-free
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0].multiplicity == 1);
    CHECK(sf.factors[0].poly == UPoly({-2, 0, 1}));
  }
  {
    // (x-1)^3 = x^3 - 3x^2 + 3x - 1
    auto sf = yun_squarefree(UPoly({-1, 3, -3, 1}));
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0].poly == UPoly({-1, 1}));
    CHECK(sf.factors[0].multiplicity == 3);
  }
  CHECK_THROWS_AS(yun_squarefree(UPoly()), PreconditionError);
}

TEST_CASE("yun reconstructs the input; factors square-free and coprime") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 120; ++t) {
    // Build structured inputs with known repeated parts.
    UPoly p = oracles::random_upoly(rng, 3, 8);
    UPoly q = oracles::random_upoly(rng, 2, 8);
    if (p.degree() < 1 || q.degree() < 1) continue;
    UPoly prod = p * q * q;
    auto sf = yun_squarefree(prod);
    CHECK(sf.reconstruct() == prod);
    for (size_t i = 0; i < sf.factors.size(); ++i) {
      const UPoly& f = sf.factors[i].poly;
      CHECK(gcd_univariate(f, f.derivative()).degree() == 0);
      for (size_t j = i + 1; j < sf.factors.size(); ++j)
        CHECK(gcd_univariate(f, sf.factors[j].poly).degree() == 0);
    }
  }
}

TEST_CASE("gcd_univariate examples and divisibility") {
  UPoly a({-2, 0, 1});
  CHECK(gcd_univariate(a, a) == a);
  CHECK(gcd_univariate(UPoly({-1, 0, 1}), UPoly({-1, 1})) == UPoly({-1, 1}));
  CHECK(gcd_univariate(UPoly({-2, 0, 1}), UPoly({-3, 0, 1})) == UPoly({1}));

  std::mt19937_64 rng(24);
  for (int t = 0; t < 100; ++t) {
    UPoly u = oracles::random_upoly(rng, 3, 10);
    UPoly v = oracles::random_upoly(rng, 3, 10);
    UPoly w = oracles::random_upoly(rng, 2, 10);
    if (u.is_zero() || v.is_zero() || w.degree() < 1) continue;
    UPoly g = gcd_univariate(u * w, v * w);
    CHECK(g.leading() > 0);
    CHECK_NOTHROW((void)(u * w).divexact(g));
    CHECK_NOTHROW((void)(v * w).divexact(g));
    CHECK_NOTHROW((void)g.divexact(gcd_univariate(w, g)));  // w's primitive part divides g
    CHECK(gcd_univariate(w.primitive_positive(), g) == w.primitive_positive());
  }
}

TEST_CASE("multiplicity_at examples") {
  {
    auto sf = yun_squarefree(UPoly({-4, 0, 4}));  // circle resultant
    CHECK(multiplicity_at(sf, AlgebraicNumber::from_rational(BigRat(1))) == 1);
  }
  {
    auto sf = yun_squarefree(UPoly({0, 0, 0, -4}));  // cusp resultant -4x^3
    CHECK(multiplicity_at(sf, AlgebraicNumber::from_rational(BigRat(0))) == 3);
  }
  {
    // -4x^2(x+1)
    auto sf = yun_squarefree(UPoly({0, 0, -4, -4}));
    CHECK(multiplicity_at(sf, AlgebraicNumber::from_rational(BigRat(1, 2))) == 0);
    CHECK(multiplicity_at(sf, AlgebraicNumber::from_rational(BigRat(-1))) == 1);
    CHECK(multiplicity_at(sf, AlgebraicNumber::from_rational(BigRat(0))) == 2);
  }
  {
    // Irrational root: sqrt(2) as a double root of (x^2-2)^2.
    UPoly f({-2, 0, 1});
    auto sf = yun_squarefree(f * f);
    auto roots = descartes_isolate(f);
    REQUIRE(roots.size() == 2);
    CHECK(multiplicity_at(sf, roots[1]) == 2);
  }
}

TEST_CASE("gcd_bivariate extracts common factors") {
  BPoly a = bp({{0, 1, 1}, {1, 0, -1}});  // y - x
  BPoly b = bp({{0, 1, 1}, {1, 0, 1}});   // y + x
  BPoly c = bp({{0, 2, 1}, {2, 0, 1}, {0, 0, -3}});
  BPoly g = gcd_bivariate(a * c, b * c);
  CHECK(divexact(g, c) == BPoly::constant(1));
  BPoly coprime = gcd_bivariate(a, b);
  CHECK(coprime.degree_y() == 0);
  CHECK(coprime.degree_x() == 0);
}
