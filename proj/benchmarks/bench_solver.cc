#include <benchmark/benchmark.h>

#include "burgers/etdrk4.hpp"
#include "burgers/transforms.hpp"

namespace {

using namespace burgers;

void bench_nonlinear_term(benchmark::State& state, ConvolutionRoute route) {
  const Grid grid(static_cast<int>(state.range(0)));
  const SpectralField u = minus_sine_initial(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonlinear_term(u, grid, route));
  }
}

void fft_product(benchmark::State& state) {
  bench_nonlinear_term(state, ConvolutionRoute::Fft);
}
void direct_product(benchmark::State& state) {
  bench_nonlinear_term(state, ConvolutionRoute::Direct);
}

void etdrk4_step(benchmark::State& state) {
  const Grid grid(static_cast<int>(state.range(0)));
  const DissipationSymbol symbol = DissipationSymbol::cosh_symbol(1.0, 1.0);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 1e-3;  // exactly one step per integrate() call
  const SpectralField u0 = minus_sine_initial(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(u0, symbol, cfg));
  }
}

void etdrk4_full_run(benchmark::State& state) {
  const Grid grid(64);
  const DissipationSymbol symbol = DissipationSymbol::cosh_symbol(1.0, 1.0);
  SolverConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  const SpectralField u0 = minus_sine_initial(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(u0, symbol, cfg));
  }
}

BENCHMARK(fft_product)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(direct_product)->Arg(64)->Arg(256);
BENCHMARK(etdrk4_step)->Arg(64)->Arg(256);
BENCHMARK(etdrk4_full_run)->Unit(benchmark::kMillisecond);

}  // namespace
