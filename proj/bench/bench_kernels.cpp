// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "pentarec/kernels.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/qseries.hpp"
#include "pentarec/rademacher.hpp"

using namespace pentarec;

namespace {

// dense operands: partition numbers against the pentagonal series
std::pair<std::vector<Rat>, std::vector<Rat>> operands(std::size_t n) {
  auto p = partition_table(static_cast<long>(n) - 1).values();
  std::vector<Rat> a(p.begin(), p.end());
  IntQSeries e = euler_product(static_cast<long>(n));
  return {a, e.coeffs()};
}

void BM_ConvolveSerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto [a, b] = operands(n);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_serial(a, b, n));
  st.SetComplexityN(st.range(0));
}

void BM_ConvolveParallel(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto [a, b] = operands(n);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::convolve_parallel(a, b, n));
  st.SetComplexityN(st.range(0));
}

void BM_RademacherSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rademacher_pn_serial(st.range(0), 50));
}

void BM_RademacherParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rademacher_pn(st.range(0), 50));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RademacherSerial)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RademacherParallel)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
