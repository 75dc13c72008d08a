#include <benchmark/benchmark.h>

#include "elastica/closed_form.hpp"
#include "elastica/geometry.hpp"
#include "elastica/shooting.hpp"
#include "elastica/special_functions.hpp"

namespace {

void BM_JacobiElliptic(benchmark::State& state) {
  double u = 0.0;
  for (auto _ : state) {
    u += 0.01;
    benchmark::DoNotOptimize(elastica::jacobi_elliptic(u, 0.5));
  }
}
BENCHMARK(BM_JacobiElliptic);

void BM_CompleteEllipticK(benchmark::State& state) {
  double m = 0.0;
  for (auto _ : state) {
    m = (m + 0.001);
    if (m >= 1.0) m -= 1.0;
    benchmark::DoNotOptimize(elastica::complete_elliptic_k(m));
  }
}
BENCHMARK(BM_CompleteEllipticK);

void BM_FunctionalsFromSupport(benchmark::State& state) {
  const elastica::SupportBody body(1.0, {0.0, 0.05, 0.02}, {0.0, 0.01, 0.0});
  for (auto _ : state)
    benchmark::DoNotOptimize(elastica::functionals_from_support(body));
}
BENCHMARK(BM_FunctionalsFromSupport);

void BM_ShootingResidual(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(elastica::shooting_residual(
        2.63, 1.86, 4.0, 1, elastica::ShootingMode::with_segments));
}
BENCHMARK(BM_ShootingResidual);

void BM_SolveMu(benchmark::State& state) {
  const double mu = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(elastica::solve_mu(mu));
}
BENCHMARK(BM_SolveMu)->Arg(2)->Arg(4)->Arg(50);

void BM_AssembleShape(benchmark::State& state) {
  const elastica::OptimalShape shape = elastica::solve_mu(4.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(elastica::assemble_shape(
        shape.params, shape.mode, shape.s1, shape.mu, shape.q,
        static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AssembleShape)->Arg(4096)->Arg(32768);

}  // namespace

BENCHMARK_MAIN();
