// Serial reference kernels against their OpenMP versions.

#include "quintforge/density.hpp"
#include "quintforge/funfield.hpp"
#include "quintforge/twist.hpp"

#include <benchmark/benchmark.h>

using namespace quintforge;

static void BM_GoodClassesSerial(benchmark::State& state) {
  const CurveRecord& rec = curve_record(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(good_classes_serial(rec, Sign::positive));
}
static void BM_GoodClassesOmp(benchmark::State& state) {
  const CurveRecord& rec = curve_record(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(good_classes(rec, Sign::positive));
}
BENCHMARK(BM_GoodClassesSerial)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GoodClassesOmp)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyPeriodSerial(benchmark::State& state) {
  const CurveRecord& rec = curve_record(6);
  for (auto _ : state) benchmark::DoNotOptimize(verify_period_serial(rec, Sign::positive, state.range(0)));
}
static void BM_VerifyPeriodOmp(benchmark::State& state) {
  const CurveRecord& rec = curve_record(6);
  for (auto _ : state) benchmark::DoNotOptimize(verify_period(rec, Sign::positive, state.range(0)));
}
BENCHMARK(BM_VerifyPeriodSerial)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPeriodOmp)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

static void BM_DensitySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(density_union_serial(Sign::negative));
}
static void BM_DensityOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(density_union(Sign::negative));
}
BENCHMARK(BM_DensitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityOmp)->Unit(benchmark::kMillisecond);

// The Q_1..Q_8 combinations: the serial path; the parallel path is computed once
// and cached by table1_point, so it is timed as a single cold call.
static void BM_Table1Serial(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 1; i <= 8; ++i) benchmark::DoNotOptimize(combine_generators(table1_combination(i)));
  }
}
static void BM_Table1OmpCold(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 1; i <= 8; ++i) benchmark::DoNotOptimize(table1_point(i));
  }
}
BENCHMARK(BM_Table1Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table1OmpCold)->Iterations(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
