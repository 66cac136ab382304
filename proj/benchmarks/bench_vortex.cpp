#include <benchmark/benchmark.h>

#include <vortex/vortex.hpp>

using namespace vortex;

namespace {
const Params kP{0.1, 1, 8.0};
}

static void BM_BuildBasis(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_basis(BasisKind::kSpectralSine, N, kP.R));
}
BENCHMARK(BM_BuildBasis)->Arg(20)->Arg(40)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ObjectiveAndGradient(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto basis = build_basis(BasisKind::kSpectralSine, N, kP.R);
  Eigen::VectorXd a = initial_guess(kP, *basis, 40.0);
  for (auto _ : state) benchmark::DoNotOptimize(objective_and_gradient(a, *basis, kP));
}
BENCHMARK(BM_ObjectiveAndGradient)->Arg(20)->Arg(40)->Arg(64);

static void BM_MinimizeSphere(benchmark::State& state) {
  auto basis = build_basis(BasisKind::kSpectralSine, 40, kP.R);
  SolverSettings s;
  s.method = state.range(0) == 0 ? DescentMethod::kLbfgs : DescentMethod::kSteepest;
  s.restarts = 1;
  s.max_iters = 20000;
  s.grad_tol = 1e-7;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_sphere(40.0, kP, basis, s));
  state.SetLabel(state.range(0) == 0 ? "lbfgs" : "steepest");
}
BENCHMARK(BM_MinimizeSphere)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MinimizeNehari(benchmark::State& state) {
  auto basis = build_basis(BasisKind::kSpectralSine, 40, kP.R);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_nehari(1.4901, kP, basis));
}
BENCHMARK(BM_MinimizeNehari)->Unit(benchmark::kMillisecond);

static void BM_Shoot(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shoot(1.4901, 1.0, kP, steps));
}
BENCHMARK(BM_Shoot)->Arg(4096)->Arg(8192)->Arg(16384)->Unit(benchmark::kMicrosecond);

static void BM_ProfileForKappa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(profile_for_kappa(1.4901, kP));
}
BENCHMARK(BM_ProfileForKappa)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
