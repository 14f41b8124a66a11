#include <numbers>

#include <benchmark/benchmark.h>

#include "molcav/entanglement.hpp"
#include "molcav/lyapunov.hpp"
#include "molcav/pipeline.hpp"
#include "molcav/presets.hpp"
#include "molcav/sweep.hpp"

namespace {

molcav::SystemParams dmb_point() {
  molcav::SystemParams p;
  p.kappa = 0.2;
  p.gamma_1 = p.gamma_2 = 0.3;
  p.N_total = 200;
  p.M_split = 100;
  p.J_m = 0.02;
  p.theta = std::numbers::pi / 2;
  p.n_th = 0.001;
  p.drive = molcav::DirectDrive{0.2, 0.2, 1.5};
  return p;
}

void BM_SolveLyapunov(benchmark::State& state) {
  const auto p = dmb_point();
  const auto sys = molcav::build_linearized_system(p, molcav::mean_fields_for(p));
  for (auto _ : state) benchmark::DoNotOptimize(molcav::solve_lyapunov(sys));
}
BENCHMARK(BM_SolveLyapunov);

void BM_OdeOracle(benchmark::State& state) {
  const auto p = dmb_point();
  const auto sys = molcav::build_linearized_system(p, molcav::mean_fields_for(p));
  const double dt = molcav::max_lyapunov_step(sys.A);
  for (auto _ : state) benchmark::DoNotOptimize(molcav::integrate_lyapunov_ode(sys, 100.0, dt));
}
BENCHMARK(BM_OdeOracle)->Unit(benchmark::kMillisecond);

void BM_ResidualContangle(benchmark::State& state) {
  const auto r = molcav::evaluate_point(dmb_point());
  for (auto _ : state) benchmark::DoNotOptimize(molcav::residual_contangle(*r.covariance));
}
BENCHMARK(BM_ResidualContangle);

void BM_EvaluatePoint(benchmark::State& state) {
  const auto p = dmb_point();
  for (auto _ : state) benchmark::DoNotOptimize(molcav::evaluate_point(p));
}
BENCHMARK(BM_EvaluatePoint);

void BM_PresetSweep(benchmark::State& state) {
  auto spec = molcav::figure_preset("fig10b");
  spec.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(molcav::run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * 202);
}
BENCHMARK(BM_PresetSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
