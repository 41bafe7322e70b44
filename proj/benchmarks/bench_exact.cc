#include <benchmark/benchmark.h>

#include <vector>

#include "burgers/extrapolation.hpp"
#include "burgers/halfspace_exact.hpp"

namespace {

using namespace burgers;

void exact_modes(benchmark::State& state) {
  ExactConfig cfg;
  cfg.k_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(cfg));
  }
}

void exact_evaluate(benchmark::State& state) {
  ExactConfig cfg;
  cfg.k_max = static_cast<int>(state.range(0));
  const ExactSolution sol = solve_exact(cfg);
  const BigReal t(1L, cfg.precision_bits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sol.v_hat(cfg.k_max, t));
  }
}

void pipeline_double(benchmark::State& state) {
  Sequence s;
  s.start_index = 1;
  for (int k = 1; k <= 40; ++k) {
    const double kk = k;
    s.values.push_back(std::exp(-kk * std::log(kk + 1.0)));
  }
  const std::vector<TransformId> stack = canonical_stack();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(s, stack));
  }
}

void pipeline_bigreal(benchmark::State& state) {
  BigSequence s;
  s.start_index = 1;
  for (int k = 1; k <= 40; ++k) {
    const BigReal kk(static_cast<long>(k), 256);
    s.values.push_back(exp(-(kk * log(kk + BigReal(1L, 256)))));
  }
  const std::vector<TransformId> stack = canonical_stack();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(s, stack));
  }
}

BENCHMARK(exact_modes)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(exact_evaluate)->Arg(12)->Arg(16);
BENCHMARK(pipeline_double);
BENCHMARK(pipeline_bigreal);

}  // namespace

BENCHMARK_MAIN();
