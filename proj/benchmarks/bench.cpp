#include <benchmark/benchmark.h>

#include "jpotts/hyper.hpp"
#include "jpotts/jformula.hpp"
#include "jpotts/mahler.hpp"
#include "jpotts/modular.hpp"
#include "jpotts/quadrature.hpp"

using namespace jpotts;

static void BM_Pfq54(benchmark::State& state) {
  PrecisionConfig prec{.digits = static_cast<int>(state.range(0))};
  auto spec = HyperSeriesSpec::f54({mpq_class(3, 2), mpq_class(3, 2), mpq_class(3, 2), 1, 1},
                                   {2, 2, 2, 2}, Cplx(Real(0.36)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfq(spec, prec).work.terms);
  }
}
BENCHMARK(BM_Pfq54)->Arg(30)->Arg(60);

static void BM_Pfq54NearUnit(benchmark::State& state) {
  PrecisionConfig prec{.digits = 25};
  auto spec = HyperSeriesSpec::f54({mpq_class(5, 4), mpq_class(3, 2), mpq_class(7, 4), 1, 1},
                                   {2, 2, 2, 2}, Cplx(Real(0.985)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfq(spec, prec).work.terms);
  }
}
BENCHMARK(BM_Pfq54NearUnit);

static void BM_JHyper(benchmark::State& state) {
  PrecisionConfig prec{.digits = 30};
  AlphaPoint pt = AlphaPoint::make(Real(0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_hyper(pt, prec).work.terms);
  }
}
BENCHMARK(BM_JHyper);

static void BM_JDirect(benchmark::State& state) {
  CubatureGrid grid;
  grid.order = static_cast<int>(state.range(0));
  grid.panels = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_direct(3.0, grid).work.nodes);
  }
}
BENCHMARK(BM_JDirect)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_JDirectTanhSinh(benchmark::State& state) {
  CubatureGrid grid = default_grid_for(2.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_direct(2.05, grid).work.nodes);
  }
}
BENCHMARK(BM_JDirectTanhSinh)->Unit(benchmark::kMillisecond);

static void BM_LatticeSum(benchmark::State& state) {
  LatticeSumSpec spec{0.5, state.range(0), true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_lattice(spec).work.nodes);
  }
}
BENCHMARK(BM_LatticeSum)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_EtaCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta23_63_coefficients(state.range(0)).size());
  }
}
BENCHMARK(BM_EtaCoefficients)->Arg(64)->Arg(512);

static void BM_DirichletL(benchmark::State& state) {
  PrecisionConfig prec{.digits = 30};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_l(-4, 2, prec).work.terms);
  }
}
BENCHMARK(BM_DirichletL);

static void BM_MahlerP4(benchmark::State& state) {
  CubatureGrid grid;
  grid.order = 32;
  grid.panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mahler_measure(LaurentPoly::p4(0.1), grid).work.nodes);
  }
}
BENCHMARK(BM_MahlerP4)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
