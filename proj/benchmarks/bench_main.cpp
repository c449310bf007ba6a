#include <benchmark/benchmark.h>

#include "berndt/berndt_integrals.hpp"
#include "berndt/constants.hpp"
#include "berndt/eisenstein.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "berndt/jacobi_series.hpp"
#include "berndt/quadrature.hpp"

namespace {

using namespace berndt;

// Fresh tables each iteration so the cache does not hide the work.
void BM_JacobiTable(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    JacobiTable table;
    table.reserve(order);
    benchmark::DoNotOptimize(table.q(order));
  }
}
BENCHMARK(BM_JacobiTable)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_SnCnDnSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_sn_cn_dn(order));
}
BENCHMARK(BM_SnCnDnSeries)->Arg(16)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_AlphaTable(benchmark::State& state) {
  for (auto _ : state) {
    for (int k = 2; k <= 20; k += 2) benchmark::DoNotOptimize(alpha_coefficient(k));
  }
}
BENCHMARK(BM_AlphaTable)->Unit(benchmark::kMillisecond);

void BM_ClosedFormToReal(benchmark::State& state) {
  const ClosedFormValue v = integral_closed_form(IntegralKind::MINUS2, 7);
  const long prec = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(to_real(v, prec));
}
BENCHMARK(BM_ClosedFormToReal)->Arg(200)->Arg(1000);

// Memoized per precision; measures the cache lookup and rounding.
void BM_GammaQuarter(benchmark::State& state) {
  const long prec = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_quarter(prec));
}
BENCHMARK(BM_GammaQuarter)->Arg(200)->Arg(2000);

void BM_SumNumeric(benchmark::State& state) {
  const SumFamily sum{Family::SINH2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sum_numeric(sum, 200));
}
BENCHMARK(BM_SumNumeric)->Arg(2)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_TanhSinh(benchmark::State& state) {
  const long prec = state.range(0);
  const HPReal a(0L, prec + 32), b(1L, prec + 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tanh_sinh_quadrature([](const HPReal& x) { return exp(-x * x); }, a, b, prec));
  }
}
BENCHMARK(BM_TanhSinh)->Arg(128)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IntegralNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(integral_numeric({IntegralKind::MINUS2, 5}, 200));
}
BENCHMARK(BM_IntegralNumeric)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
