#include "valext/extend.hpp"
#include "valext/ff_factor.hpp"
#include "valext/poly_io.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace valext;

static void BM_EnumerateEisenstein(benchmark::State& state) {
  BaseValuation v(BaseKind::PAdic, 2);
  BasePoly f = parse_poly("x^2-2", v);
  for (auto _ : state) {
    auto r = enumerate_extensions(f, v);
    benchmark::DoNotOptimize(r.sum_efd);
  }
}
BENCHMARK(BM_EnumerateEisenstein);

static void BM_EnumerateTwoLevel(benchmark::State& state) {
  BaseValuation v(BaseKind::PAdic, 2);
  BasePoly f = parse_poly("x^2+4", v);
  for (auto _ : state) {
    auto r = enumerate_extensions(f, v);
    benchmark::DoNotOptimize(r.sum_efd);
  }
}
BENCHMARK(BM_EnumerateTwoLevel);

static void BM_EnumerateQuintic(benchmark::State& state) {
  BaseValuation v(BaseKind::PAdic, 3);
  BasePoly f = parse_poly("x^5+3*x^2-9", v);
  for (auto _ : state) {
    auto r = enumerate_extensions(f, v);
    benchmark::DoNotOptimize(r.sum_efd);
  }
}
BENCHMARK(BM_EnumerateQuintic);

static void BM_FFFactorDeg8(benchmark::State& state) {
  FiniteFieldTower t(5);
  std::mt19937_64 rng(1);
  std::vector<FFElem> cs;
  for (int i = 0; i < 8; ++i) cs.push_back(t.from_uint(rng() % 5, 0));
  cs.push_back(t.one(0));
  FFPoly g = t.poly_from_coeffs(0, std::move(cs));
  for (auto _ : state) {
    auto fs = ff_factor(t, g, 7);
    benchmark::DoNotOptimize(fs.size());
  }
}
BENCHMARK(BM_FFFactorDeg8);

static void BM_ChainValue(benchmark::State& state) {
  BaseValuation v(BaseKind::PAdic, 2);
  auto iv1 = InductiveValuation::initial(v, Rat(1));
  const FiniteFieldTower& t = iv1.tower();
  FFPoly psi = t.poly_from_coeffs(0, {t.one(0), t.one(0)});
  auto iv2 = iv1.augment(parse_poly("x-2", v), Rat(3, 2), psi);
  BasePoly h = parse_poly("x^6-3*x^4+12*x^2-8*x+44", v);
  for (auto _ : state) {
    Value val = iv2.value(h);
    benchmark::DoNotOptimize(val.is_finite());
  }
}
BENCHMARK(BM_ChainValue);

BENCHMARK_MAIN();
