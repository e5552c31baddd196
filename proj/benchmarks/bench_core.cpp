#include <cmath>

#include <benchmark/benchmark.h>

#include "gramqfi/cat.hpp"
#include "gramqfi/engine.hpp"
#include "gramqfi/linalg.hpp"
#include "gramqfi/ortho.hpp"

namespace {

using namespace gramqfi;

// Deterministic dense Hermitian test matrices without pulling in <random>.
CMatrix dense_hermitian(Index n, double phase) {
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m(i, j) = Complex(std::sin(phase + 0.7 * i + 1.3 * j),
                        std::cos(phase + 0.3 * i - 0.9 * j));
    }
  }
  return (0.5 * (m + m.adjoint())).eval();
}

void BM_LyapunovSolve(benchmark::State& state) {
  const Index n = state.range(0);
  CMatrix a = dense_hermitian(n, 0.1);
  a = (a * a.adjoint()).eval();
  a /= a.trace().real();
  const CMatrix c = dense_hermitian(n, 1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lyapunov_lstsq(a, a, c));
  }
}
BENCHMARK(BM_LyapunovSolve)->DenseRange(2, 6);

void BM_JointModelPipeline(benchmark::State& state) {
  CatConfig cfg;
  cfg.c = 0.5;
  cfg.alpha = 1.0;
  for (auto _ : state) {
    const ModelMatrices model = build_alpha_model(cfg);
    const SldSolution slds = solve_slds(model);
    benchmark::DoNotOptimize(qfi_gamma(model, slds));
  }
}
BENCHMARK(BM_JointModelPipeline);

void BM_DisplacementModelPipeline(benchmark::State& state) {
  CatConfig cfg;
  cfg.c = 0.8;
  cfg.alpha = 1.5;
  for (auto _ : state) {
    const ModelMatrices model = build_displacement_model(cfg);
    const SldSolution slds = solve_slds(model);
    benchmark::DoNotOptimize(qfi_gamma(model, slds));
  }
}
BENCHMARK(BM_DisplacementModelPipeline);

void BM_EigenOracle(benchmark::State& state) {
  CatConfig cfg;
  cfg.c = 0.5;
  cfg.alpha = 1.0;
  const ModelMatrices model = build_alpha_model(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen_qfi(orthonormalize(model)));
  }
}
BENCHMARK(BM_EigenOracle);

}  // namespace

BENCHMARK_MAIN();
