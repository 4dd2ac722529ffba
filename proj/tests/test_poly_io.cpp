#include "valext/poly_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace valext;

TEST_CASE("parsing over Q") {
  BaseValuation v(BaseKind::PAdic, 2);
  BasePoly f = parse_poly("x^2 - 2", v);
  CHECK(f.degree() == 2);
  CHECK(f.c[0] == BaseElem(Rat(-2)));
  CHECK(f.c[2] == v.one());
  CHECK(parse_poly("3/2*x + 1/4", v).c[1] == BaseElem(Rat(3, 2)));
  CHECK(parse_poly("(x-1)*(x+1)", v) == parse_poly("x^2-1", v));
  CHECK(parse_poly("-x", v).c[1] == BaseElem(Rat(-1)));
}

TEST_CASE("parsing over F_3(t) reduces coefficients mod 3") {
  BaseValuation v(BaseKind::TAdic, 3);
  BasePoly f = parse_poly("x^2 - x - t", v);
  REQUIRE(f.degree() == 2);
  CHECK(f.c[0] == BaseElem(RatFunc{FpPoly{3, {0, 2}}, FpPoly::constant(3, 1)}));  // -t = 2t
  CHECK(f.c[1] == BaseElem(RatFunc{FpPoly{3, {2}}, FpPoly::constant(3, 1)}));     // -1 = 2
  CHECK(f.c[2] == v.one());
  CHECK(parse_poly("4*x", v).c[1] == v.one());  // 4 = 1 mod 3
}

TEST_CASE("syntax errors carry positions") {
  BaseValuation v(BaseKind::PAdic, 2);
  try {
    parse_poly("x^^2", v);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_poly("x +", v), ParseError);
  CHECK_THROWS_AS(parse_poly("x^2 - t", v), ParseError);  // t invalid over Q
  CHECK_THROWS_AS(parse_poly("x/x", v), ParseError);
  CHECK_THROWS_AS(parse_poly("x^2 )", v), ParseError);
}

TEST_CASE("print . parse round trips") {
  std::mt19937_64 rng(41);
  BaseValuation vq(BaseKind::PAdic, 5);
  for (int it = 0; it < 120; ++it) {
    BasePoly f = testing::random_int_poly(vq, rng, 1 + static_cast<int>(rng() % 5), 50);
    // sprinkle rational and zero coefficients
    if (f.degree() >= 2) {
      f.c[1] = BaseElem(Rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 7)));
      f.c[0] = (rng() % 3 == 0) ? vq.zero() : f.c[0];
    }
    CHECK(parse_poly(print_poly(vq, f), vq) == f);
  }
  BaseValuation vt(BaseKind::TAdic, 3);
  for (int it = 0; it < 120; ++it) {
    BasePoly f = testing::random_tpoly(vt, rng, 1 + static_cast<int>(rng() % 4), 3);
    CHECK(parse_poly(print_poly(vt, f), vt) == f);
  }
  CHECK(parse_poly(print_poly(vq, BasePoly{}), vq) == BasePoly{});
}
