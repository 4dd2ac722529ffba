#include "valext/base_field.hpp"
#include "valext/errors.hpp"
#include "valext/newton.hpp"
#include "valext/poly_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace valext;

TEST_CASE("base values") {
  BaseValuation v2(BaseKind::PAdic, 2);
  CHECK(v2.value(v2.from_int(12)) == Value(Rat(2)));  // 12 = 4*3
  CHECK(v2.value(v2.from_int(1)) == Value(Rat(0)));
  CHECK(v2.value(v2.from_int(0)) == Value::infinity());
  CHECK(v2.value(BaseElem(Rat(5, 12))) == Value(Rat(-2)));

  BaseValuation vt(BaseKind::TAdic, 3);
  // t^3 / (1+t)
  BaseElem a(RatFunc{FpPoly{3, {0, 0, 0, 1}}, FpPoly{3, {1, 1}}});
  CHECK(vt.value(a) == Value(Rat(3)));
}

TEST_CASE("residue and lift") {
  BaseValuation v2(BaseKind::PAdic, 2);
  CHECK(v2.residue(BaseElem(Rat(5, 3))) == v2.residue_field().from_uint(1, 0));
  BaseValuation v5(BaseKind::PAdic, 5);
  CHECK(v5.residue(v5.from_int(7)) == v5.residue_field().from_uint(2, 0));
  CHECK(v5.residue(v5.lift(v5.residue_field().from_uint(3, 0))) ==
        v5.residue_field().from_uint(3, 0));
  CHECK(v5.lift(v5.residue_field().one(0)) == v5.one());
  CHECK_THROWS(v5.residue(v5.from_int(10)));
}

TEST_CASE("input normalization") {
  SUBCASE("x^2+1 at p=5 scales once") {
    BaseValuation v(BaseKind::PAdic, 5);
    BasePoly f = parse_poly("x^2+1", v);
    NormalizedInput n = v.normalize_input(f);
    CHECK(n.shift == 1);
    CHECK(print_poly(v, n.poly) == "x^2 + 25");
  }
  SUBCASE("x^2-2 at p=2 is already normalized") {
    BaseValuation v(BaseKind::PAdic, 2);
    NormalizedInput n = v.normalize_input(parse_poly("x^2-2", v));
    CHECK(n.shift == 0);
    CHECK(print_poly(v, n.poly) == "x^2 - 2");
  }
  SUBCASE("x-1 at p=2 needs one scaling step") {
    BaseValuation v(BaseKind::PAdic, 2);
    NormalizedInput n = v.normalize_input(parse_poly("x-1", v));
    CHECK(n.shift == 1);
    CHECK(print_poly(v, n.poly) == "x - 2");
  }
  SUBCASE("repeated factors are rejected") {
    BaseValuation v(BaseKind::PAdic, 2);
    CHECK_THROWS_AS(v.normalize_input(parse_poly("x^2-2*x+1", v)), NotSquarefree);
  }
  SUBCASE("inseparable input over F_p(t) is rejected") {
    BaseValuation v(BaseKind::TAdic, 3);
    CHECK_THROWS_AS(v.normalize_input(parse_poly("x^3-t", v)), NotSquarefree);
  }
}

TEST_CASE("valuation axioms on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-200, 200);
  std::uniform_int_distribution<long> den(1, 200);

  BaseValuation vq(BaseKind::PAdic, 3);
  for (int i = 0; i < 1000; ++i) {
    BaseElem a(Rat(num(rng), den(rng)));
    BaseElem b(Rat(num(rng), den(rng)));
    Value va = vq.value(a), vb = vq.value(b);
    CHECK(vq.value(a * b) == va + vb);
    CHECK(vq.value(a + b) >= min(va, vb));
  }

  BaseValuation vt(BaseKind::TAdic, 2);
  auto rand_rf = [&] {
    FpPoly n{2, {}}, d{2, {}};
    for (int k = 0; k < 4; ++k) n.c.push_back(rng() % 2);
    for (int k = 0; k < 3; ++k) d.c.push_back(rng() % 2);
    while (!n.c.empty() && n.c.back() == 0) n.c.pop_back();
    while (!d.c.empty() && d.c.back() == 0) d.c.pop_back();
    if (d.is_zero()) d = FpPoly::constant(2, 1);
    RatFunc f{n, d};
    f.reduce();
    return BaseElem(f);
  };
  for (int i = 0; i < 1000; ++i) {
    BaseElem a = rand_rf(), b = rand_rf();
    Value va = vt.value(a), vb = vt.value(b);
    CHECK(vt.value(a * b) == va + vb);
    CHECK(vt.value(a + b) >= min(va, vb));
  }
}

TEST_CASE("residue is a ring homomorphism on value-0 elements") {
  std::mt19937_64 rng(9);
  BaseValuation v(BaseKind::PAdic, 5);
  const FiniteFieldTower& t = v.residue_field();
  std::uniform_int_distribution<long> num(-200, 200);
  int done = 0;
  while (done < 300) {
    BaseElem a(Rat(num(rng), 1 + (rng() % 100)));
    BaseElem b(Rat(num(rng), 1 + (rng() % 100)));
    if (!(v.value(a) == Value(Rat(0))) || !(v.value(b) == Value(Rat(0)))) continue;
    CHECK(v.residue(a * b) == t.mul(v.residue(a), v.residue(b)));
    if (v.value(a + b) == Value(Rat(0)))
      CHECK(v.residue(a + b) == t.add(v.residue(a), v.residue(b)));
    ++done;
  }
}

TEST_CASE("normalization shifts the root-valuation multiset by the recorded k") {
  std::mt19937_64 rng(21);
  BaseValuation v(BaseKind::PAdic, 3);
  auto polygon_of = [&](const BasePoly& f) {
    std::vector<PolygonPoint> pts;
    for (int i = 0; i <= f.degree(); ++i) {
      const BaseElem& c = f.c[static_cast<std::size_t>(i)];
      pts.push_back(PolygonPoint{i, c.is_zero() ? Value::infinity() : v.value(c)});
    }
    return lower_hull(pts);
  };
  int tried = 0;
  for (int it = 0; it < 200 && tried < 60; ++it) {
    BasePoly f = testing::random_int_poly(v, rng, 2 + static_cast<int>(rng() % 3), 30);
    NormalizedInput n;
    try {
      n = v.normalize_input(f);
    } catch (const NotSquarefree&) {
      continue;
    }
    ++tried;
    CHECK(n.poly.leading() == v.one());
    for (int i = 0; i < n.poly.degree(); ++i) {
      const BaseElem& c = n.poly.c[static_cast<std::size_t>(i)];
      if (!c.is_zero()) CHECK(v.value(c) > Value(Rat(0)));
    }
    NewtonPolygon pf = polygon_of(f);
    NewtonPolygon pg = polygon_of(n.poly);
    REQUIRE(pf.sides().size() == pg.sides().size());
    for (std::size_t s = 0; s < pf.sides().size(); ++s) {
      CHECK(pg.sides()[s].beta == pf.sides()[s].beta + Rat(n.shift));
      CHECK(pg.sides()[s].length == pf.sides()[s].length);
    }
    CHECK(pg.min_index() == pf.min_index());
  }
  CHECK(tried >= 50);
}
