// Serial reference vs OpenMP kernels: lattice enumeration and the pairwise
// overlap search of verify_tiling.

#include "torus/skeleton.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace torus;

const LatticeBasis kBasis(3, 5, -4, 1);

// A valid tiling with many rectangles: the optimal one cut into slabs.
Tiling sliced(int cuts) {
  const Tiling base = build_optimal(kBasis);
  Tiling out{kBasis, {}};
  for (const Rect& r : base.rects)
    for (int k = 0; k < cuts; ++k)
      out.rects.push_back(Rect::make(r.x0 + r.width() * Rat(k, cuts), r.x0 + r.width() * Rat(k + 1, cuts),
                                     r.y0, r.y1));
  return out;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const Rat radius(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points_serial(kBasis, radius));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Rat radius(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points(kBasis, radius));
}

void BM_VerifySerial(benchmark::State& state) {
  const Tiling t = sliced(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tiling_serial(t));
}

void BM_VerifyParallel(benchmark::State& state) {
  const Tiling t = sliced(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tiling(t));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
