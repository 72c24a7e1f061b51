// Serial reference versus OpenMP versions of the parameter sweeps.

#include <benchmark/benchmark.h>

#include <vector>

#include "hill4/cli/commands.hpp"
#include "hill4/core_types.hpp"
#include "hill4/equilibria.hpp"

using namespace hill4;

namespace {

const SystemParams& hektor() {
  static const SystemParams p = normalize_system(hektor_inputs());
  return p;
}

std::vector<double> mu_grid(int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = 0.5 * (k + 1) / n;
  return g;
}

std::vector<double> rz_grid(int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = 0.000892354498497342 + (0.01 - 0.000892354498497342) * k / (n - 1);
  return g;
}

void BM_classify_serial(benchmark::State& st) {
  const auto g = mu_grid(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(eq::classify_over_parameters_serial(eq::Axis::y, g, -1.32716e-7, hektor().m3));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_classify_parallel(benchmark::State& st) {
  const auto g = mu_grid(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(eq::classify_over_parameters(eq::Axis::y, g, -1.32716e-7, hektor().m3));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_krein_serial(benchmark::State& st) {
  const auto g = rz_grid(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(eq::krein_limit_check_serial(g, hektor().lambda1, hektor().lambda2));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_krein_parallel(benchmark::State& st) {
  const auto g = rz_grid(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    benchmark::DoNotOptimize(eq::krein_limit_check(g, hektor().lambda1, hektor().lambda2));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sweep_z(benchmark::State& st) {
  const bool parallel = st.range(1) != 0;
  const cli::SweepRange r{-0.95, -0.001, static_cast<int>(st.range(0)), cli::Spacing::linear};
  for (auto _ : st) benchmark::DoNotOptimize(cli::cmd_sweep_z(hektor(), r, parallel));
  st.SetItemsProcessed(st.iterations() * st.range(0));
  st.SetLabel(parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_classify_serial)->Arg(50)->Arg(2000);
BENCHMARK(BM_classify_parallel)->Arg(50)->Arg(2000);
BENCHMARK(BM_krein_serial)->Arg(200)->Arg(20000);
BENCHMARK(BM_krein_parallel)->Arg(200)->Arg(20000);
BENCHMARK(BM_sweep_z)->Args({200, 0})->Args({200, 1})->Args({5000, 0})->Args({5000, 1});

BENCHMARK_MAIN();
