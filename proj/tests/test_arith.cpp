#include "valext/ff_factor.hpp"
#include "valext/finite_field.hpp"
#include "valext/rational.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace valext;

TEST_CASE("rational arithmetic and value ordering") {
  CHECK(Rat(1, 2) + Rat(1) == Rat(3, 2));
  CHECK(min(Value::infinity(), Value(Rat(5, 3))) == Value(Rat(5, 3)));
  CHECK(Rat(3, 2) > Rat(10, 7));  // cross-multiply: 21 vs 20
  CHECK(Value::infinity() + Value(Rat(7)) == Value::infinity());
  CHECK(Value(Rat(1, 3)) < Value::infinity());
  CHECK(Value(Rat(1, 2)).str() == "1/2");
  CHECK(Value::infinity().str() == "inf");
  CHECK(rat_floor(Rat(-3, 2)) == -2);
  CHECK(rat_ceil(Rat(-3, 2)) == -1);
}

TEST_CASE("tower element arithmetic over F_5") {
  FiniteFieldTower t(5);
  FFElem a = t.from_uint(3, 0);
  FFElem b = t.from_uint(4, 0);
  CHECK(t.mul(a, b) == t.from_uint(2, 0));
  CHECK(t.add(a, b) == t.from_uint(2, 0));
  CHECK(t.mul(a, t.inv(a)) == t.one(0));
}

TEST_CASE("divmod over F_5: (y^2+1) / (y+2)") {
  FiniteFieldTower t(5);
  FFPoly a = t.poly_from_coeffs(0, {t.one(0), t.zero(0), t.one(0)});
  FFPoly b = t.poly_from_coeffs(0, {t.from_uint(2, 0), t.one(0)});
  auto [q, r] = t.poly_divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == t.poly_from_coeffs(0, {t.from_uint(3, 0), t.one(0)}));
}

TEST_CASE("gcd over F_2: gcd(y^2+1, y+1) = y+1") {
  FiniteFieldTower t(2);
  FFPoly a = t.poly_from_coeffs(0, {t.one(0), t.zero(0), t.one(0)});
  FFPoly b = t.poly_from_coeffs(0, {t.one(0), t.one(0)});
  CHECK(t.poly_gcd(a, b) == b);
}

TEST_CASE("multiplying by one is the identity") {
  FiniteFieldTower t(3);
  FFPoly a = t.poly_from_coeffs(0, {t.from_uint(2, 0), t.one(0), t.from_uint(2, 0)});
  CHECK(t.poly_mul(a, t.poly_constant(t.one(0))) == a);
}

TEST_CASE("tower extension") {
  SUBCASE("F_5 by y^2+3y+4 (irreducible: no roots among 5 candidates)") {
    FiniteFieldTower t(5);
    FFPoly m = t.poly_from_coeffs(0, {t.from_uint(4, 0), t.from_uint(3, 0), t.one(0)});
    CHECK(testing::brute_roots(t, m).empty());
    FiniteFieldTower t2 = ff_tower_extend(t, m);
    CHECK(t2.absolute_degree() == 2);
    FFElem g = t2.generator(1);
    // g^2 + 3g + 4 = 0
    FFElem lhs = t2.add(t2.add(t2.mul(g, g), t2.mul(t2.from_uint(3, 1), g)), t2.from_uint(4, 1));
    CHECK(lhs.is_zero());
  }
  SUBCASE("F_2 by y^2+y+1 gives F_4") {
    FiniteFieldTower t(2);
    FFPoly m = t.poly_from_coeffs(0, {t.one(0), t.one(0), t.one(0)});
    CHECK(testing::brute_roots(t, m).empty());
    CHECK(ff_tower_extend(t, m).absolute_degree() == 2);
  }
  SUBCASE("degree-1 extension is rejected") {
    FiniteFieldTower t(2);
    FFPoly m = t.poly_from_coeffs(0, {t.one(0), t.one(0)});
    CHECK_THROWS_AS(ff_tower_extend(t, m), std::invalid_argument);
  }
  SUBCASE("reducible polynomial is rejected with a witness") {
    FiniteFieldTower t(5);
    FFPoly m = t.poly_from_coeffs(0, {t.one(0), t.zero(0), t.one(0)});  // y^2+1 = (y+2)(y+3)
    CHECK_THROWS_WITH_AS(ff_tower_extend(t, m), doctest::Contains("reducible"),
                         std::invalid_argument);
  }
}

TEST_CASE("factorization examples") {
  SUBCASE("y^2+1 over F_5 splits into y+2 and y+3") {
    FiniteFieldTower t(5);
    FFPoly g = t.poly_from_coeffs(0, {t.one(0), t.zero(0), t.one(0)});
    auto fs = ff_factor(t, g);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == t.poly_from_coeffs(0, {t.from_uint(2, 0), t.one(0)}));
    CHECK(fs[0].second == 1);
    CHECK(fs[1].first == t.poly_from_coeffs(0, {t.from_uint(3, 0), t.one(0)}));
    CHECK(fs[1].second == 1);
  }
  SUBCASE("y^2+1 over F_2 is (y+1)^2") {
    FiniteFieldTower t(2);
    FFPoly g = t.poly_from_coeffs(0, {t.one(0), t.zero(0), t.one(0)});
    auto fs = ff_factor(t, g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == t.poly_from_coeffs(0, {t.one(0), t.one(0)}));
    CHECK(fs[0].second == 2);
  }
  SUBCASE("y factors as itself") {
    FiniteFieldTower t(3);
    auto fs = ff_factor(t, t.poly_var(0));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == t.poly_var(0));
    CHECK(fs[0].second == 1);
  }
}

namespace {

FFPoly random_poly(const FiniteFieldTower& t, int level, int deg, std::mt19937_64& rng) {
  std::vector<FFElem> cs;
  for (int i = 0; i < deg; ++i) {
    FFElem e = t.zero(level);
    if (level == 0) {
      e = t.from_uint(rng() % t.characteristic(), 0);
    } else {
      int d = t.minpoly(level).degree();
      for (int k = 0; k < d; ++k) e.coeffs.push_back(t.from_uint(rng() % t.characteristic(), 0));
      while (!e.coeffs.empty() && e.coeffs.back().is_zero()) e.coeffs.pop_back();
    }
    cs.push_back(e);
  }
  cs.push_back(t.one(level));  // monic of exact degree
  return t.poly_from_coeffs(level, std::move(cs));
}

void check_recombination(const FiniteFieldTower& t, int level, int count, std::mt19937_64& rng) {
  for (int it = 0; it < count; ++it) {
    int deg = 1 + static_cast<int>(rng() % 8);
    FFPoly g = random_poly(t, level, deg, rng);
    auto fs = ff_factor(t, g, 7);
    FFPoly prod = t.poly_constant(g.c.back());
    for (const auto& [fac, mult] : fs) {
      CHECK(fac.c.back() == t.one(level));  // monic
      for (int i = 0; i < mult; ++i) prod = t.poly_mul(prod, fac);
    }
    CHECK(prod == g);
  }
}

}  // namespace

TEST_CASE("factor recombination reproduces the input exactly") {
  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    FiniteFieldTower t(p);
    check_recombination(t, 0, 170, rng);
  }
  // one degree-2 tower: F_5[y]/(y^2+3y+4)
  FiniteFieldTower t(5);
  FiniteFieldTower t2 =
      ff_tower_extend(t, t.poly_from_coeffs(0, {t.from_uint(4, 0), t.from_uint(3, 0), t.one(0)}));
  std::mt19937_64 rng2(43);
  check_recombination(t2, 1, 60, rng2);
}

TEST_CASE("linear factors agree with exhaustive root enumeration, deg <= 3") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    FiniteFieldTower t(p);
    // every monic polynomial of degree <= 3
    for (int deg = 1; deg <= 3; ++deg) {
      std::vector<std::uint64_t> digits(static_cast<std::size_t>(deg), 0);
      while (true) {
        std::vector<FFElem> cs;
        for (auto d : digits) cs.push_back(t.from_uint(d, 0));
        cs.push_back(t.one(0));
        FFPoly g = t.poly_from_coeffs(0, std::move(cs));
        auto expected_roots = testing::brute_roots(t, g);
        std::map<std::uint64_t, int> expected;  // root -> multiplicity
        for (const auto& r : expected_roots) {
          FFPoly lin = t.poly_from_coeffs(0, {t.neg(r), t.one(0)});
          FFPoly rest = g;
          int mult = 0;
          while (true) {
            auto [q, rem] = t.poly_divmod(rest, lin);
            if (!rem.is_zero()) break;
            ++mult;
            rest = q;
          }
          expected[r.scalar] = mult;
        }
        std::map<std::uint64_t, int> got;
        for (const auto& [fac, mult] : ff_factor(t, g)) {
          if (fac.degree() != 1) continue;
          got[t.neg(fac.c[0]).scalar] = mult;
        }
        CHECK(got == expected);
        // next tuple of digits
        std::size_t pos = 0;
        while (pos < digits.size()) {
          if (++digits[pos] < p) break;
          digits[pos] = 0;
          ++pos;
        }
        if (pos == digits.size()) break;
      }
    }
  }
}

TEST_CASE("identical seeds give identical factorizations") {
  FiniteFieldTower t(3);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 25; ++it) {
    FFPoly g = random_poly(t, 0, 2 + static_cast<int>(rng() % 6), rng);
    auto a = ff_factor(t, g, 123);
    auto b = ff_factor(t, g, 123);
    CHECK(a == b);
  }
}
