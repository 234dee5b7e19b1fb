#include <benchmark/benchmark.h>

#include "cubesign/orthosolve.hpp"
#include "cubesign/pauli.hpp"
#include "cubesign/spectral.hpp"

namespace {

using namespace cubesign;

void BM_Spectrum(benchmark::State& state) {
  CubelikeGraph g = CubelikeGraph::hypercube_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenvalues(g));
  }
}
BENCHMARK(BM_Spectrum)->DenseRange(6, 12, 2);

void BM_DecideOrthogonal(benchmark::State& state) {
  CubelikeGraph g = CubelikeGraph::hypercube_plus(static_cast<int>(state.range(0)));
  CycleSystem sys = build_system(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(sys));
  }
}
BENCHMARK(BM_DecideOrthogonal)->DenseRange(4, 8, 1);

void BM_VerifySigning(benchmark::State& state) {
  CubelikeGraph g = CubelikeGraph::hypercube_plus(static_cast<int>(state.range(0)));
  SigningMatrix m = construct_signing(g.s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_unitary_signing(m, g));
  }
}
BENCHMARK(BM_VerifySigning)->DenseRange(4, 10, 2);

void BM_FourCycles(benchmark::State& state) {
  CubelikeGraph g = CubelikeGraph::hypercube_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_cycles(g));
  }
}
BENCHMARK(BM_FourCycles)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
