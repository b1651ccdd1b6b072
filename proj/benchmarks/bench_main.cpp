#include <benchmark/benchmark.h>

#include "gwex/gwex.hpp"

using namespace gwex;

namespace {

void BM_ConditionalUpdate(benchmark::State& state) {
  auto sigma = build_tms_thermal(0.1, 1.0);
  auto meas = GaussianMeasurement::heterodyne();
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_state_after_b_measurement(sigma, meas));
  }
}
BENCHMARK(BM_ConditionalUpdate);

void BM_ExactWork(benchmark::State& state) {
  auto ctx = ThermalContext::from_beta(50.0);
  auto meas = GaussianMeasurement::heterodyne();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extracted_work_exact(ctx, 1.0, meas));
  }
}
BENCHMARK(BM_ExactWork);

void BM_ClosedFormWork(benchmark::State& state) {
  auto ctx = ThermalContext::from_beta(50.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extracted_work_closed_form(ctx, 1.0));
  }
}
BENCHMARK(BM_ClosedFormWork);

void BM_LogNegativity(benchmark::State& state) {
  auto sigma = build_tms_thermal(0.1, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_negativity(sigma));
  }
}
BENCHMARK(BM_LogNegativity);

void BM_FockBuild(benchmark::State& state) {
  fock::OracleConfig cfg;
  cfg.n_cut = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::build_tms_thermal_fock(0.1, 1.0, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FockBuild)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_HeterodyneProject(benchmark::State& state) {
  fock::OracleConfig cfg;
  cfg.n_cut = 48;
  auto st = fock::build_tms_thermal_fock(0.1, 1.0, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::heterodyne_project_b(st, {1.0, 1.0}));
  }
}
BENCHMARK(BM_HeterodyneProject);

void BM_OracleWork(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::oracle_work(0.1, 1.0));
  }
}
BENCHMARK(BM_OracleWork);

}  // namespace

BENCHMARK_MAIN();
