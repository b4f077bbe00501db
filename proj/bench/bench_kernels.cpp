#include <benchmark/benchmark.h>

#include <numbers>

#include "strainwig/grid_kernels.hpp"
#include "strainwig/oracle/finite_difference.hpp"
#include "strainwig/wigner_core.hpp"

using namespace strainwig;

namespace {

struct Fixture {
  FieldFrame frame;
  CoherentSpec spec;
  GridSpec grid;
};

Fixture make_fixture(int n) {
  StrainConfig c;
  c.epsilon = 0.2;
  Fixture f;
  f.frame = FieldFrame::make(1.0, 0.0, cone_parameters(c));
  f.spec.alpha = std::polar(3.0, -std::numbers::pi / 2);
  f.grid = default_evolve_grid(f.spec, f.frame, n);
  return f;
}

void BM_FillSerial(benchmark::State& state) {
  const Fixture fx = make_fixture(static_cast<int>(state.range(0)));
  const CoherentWigner eval(fx.spec, fx.frame, 10.0);
  WignerField f(fx.grid);
  f.meta.frame = fx.frame;
  for (auto _ : state) {
    fill_field_serial(f, eval);
    benchmark::DoNotOptimize(f.w11.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fx.grid.size()));
}

void BM_FillParallel(benchmark::State& state) {
  const Fixture fx = make_fixture(static_cast<int>(state.range(0)));
  const CoherentWigner eval(fx.spec, fx.frame, 10.0);
  WignerField f(fx.grid);
  f.meta.frame = fx.frame;
  for (auto _ : state) {
    fill_field(f, eval);
    benchmark::DoNotOptimize(f.w11.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fx.grid.size()));
}

void BM_StatsSerial(benchmark::State& state) {
  const Fixture fx = make_fixture(static_cast<int>(state.range(0)));
  const WignerField f = landau_field(3, fx.frame, fx.grid);
  for (auto _ : state) benchmark::DoNotOptimize(field_stats_serial(f));
}

void BM_StatsParallel(benchmark::State& state) {
  const Fixture fx = make_fixture(static_cast<int>(state.range(0)));
  const WignerField f = landau_field(3, fx.frame, fx.grid);
  for (auto _ : state) benchmark::DoNotOptimize(field_stats(f));
}

oracle::GridFunction<cplx> stencil_input(int n) {
  return oracle::GridFunction<cplx>::sample(n, -6, 6, n, -6, 6, [](double u, double v) {
    return cplx{std::exp(-u * u - v * v), 0.0};
  });
}

void BM_StencilSerial(benchmark::State& state) {
  const auto g = stencil_input(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::fd_apply_serial(oracle::Derivative::Second, g, oracle::Axis::U));
}

void BM_StencilParallel(benchmark::State& state) {
  const auto g = stencil_input(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::fd_apply(oracle::Derivative::Second, g, oracle::Axis::U));
}

}  // namespace

BENCHMARK(BM_FillSerial)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillParallel)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StatsSerial)->Arg(201)->Arg(401);
BENCHMARK(BM_StatsParallel)->Arg(201)->Arg(401);
BENCHMARK(BM_StencilSerial)->Arg(401)->Arg(801);
BENCHMARK(BM_StencilParallel)->Arg(401)->Arg(801);

BENCHMARK_MAIN();
