#include <benchmark/benchmark.h>

#include "thermoform/thermoform.hpp"

namespace {

using namespace thermoform;

const StatePoint kA = StatePoint::sv(0, 1);
const StatePoint kB = StatePoint::sv(1, 2);

void BM_LineIntegralSegment(benchmark::State& state) {
  const EosModel m = ideal_gas();
  const OneForm w = energy_form(m);
  const Path p = Path::segment(kA, kB);
  for (auto _ : state) benchmark::DoNotOptimize(line_integral(w, p));
}
BENCHMARK(BM_LineIntegralSegment);

void BM_LineIntegralFourier(benchmark::State& state) {
  const EosModel m = ideal_gas();
  const OneForm w = heat_form(m);
  const Path p = generate_paths({PathGenerator::fourier_perturbed, 1, 1, 0.1}, kA, kB, m.domain())[0];
  for (auto _ : state) benchmark::DoNotOptimize(line_integral(w, p));
}
BENCHMARK(BM_LineIntegralFourier);

void BM_Action(benchmark::State& state) {
  const EosModel m = van_der_waals(0.1, 0.05);
  const Path p = Path::segment(kA, kB).perturbed({0.05, -0.02}, {0.1});
  for (auto _ : state) benchmark::DoNotOptimize(action(m, p));
}
BENCHMARK(BM_Action);

void BM_MaxwellResidual(benchmark::State& state) {
  const EosModel m = van_der_waals(0.1, 0.05);
  const MaxwellCase& c = MaxwellCase::get(static_cast<int>(state.range(0)));
  const Differentiator engine(static_cast<DerivativeMode>(state.range(1)));
  const StatePoint p = StatePoint::sv(0.4, 1.6);
  for (auto _ : state) benchmark::DoNotOptimize(maxwell_residual_partials(m, c, p, engine));
}
BENCHMARK(BM_MaxwellResidual)
    ->ArgsProduct({{1, 2, 3, 4},
                   {static_cast<int>(DerivativeMode::analytic), static_cast<int>(DerivativeMode::dual_number),
                    static_cast<int>(DerivativeMode::central_difference)}})
    ->ArgNames({"case", "mode"});

void BM_MaxwellJacobianRoute(benchmark::State& state) {
  const EosModel m = van_der_waals(0.1, 0.05);
  const StatePoint p = StatePoint::sv(0.4, 1.6);
  for (auto _ : state) {
    for (const MaxwellCase& c : MaxwellCase::all()) benchmark::DoNotOptimize(maxwell_residual_jacobian(m, c, p));
  }
}
BENCHMARK(BM_MaxwellJacobianRoute);

void BM_Inversion(benchmark::State& state) {
  const EosModel m = van_der_waals(0.1, 0.05);
  const Chart chart = static_cast<Chart>(state.range(0));
  const StatePoint target = to_chart(m, StatePoint::sv(0.4, 1.6), chart);
  for (auto _ : state) benchmark::DoNotOptimize(invert_to_chart(m, target));
}
BENCHMARK(BM_Inversion)
    ->Arg(static_cast<int>(Chart::TV))
    ->Arg(static_cast<int>(Chart::SP))
    ->Arg(static_cast<int>(Chart::TP))
    ->ArgName("chart");

void BM_CarnotCycle(benchmark::State& state) {
  const EosModel m = ideal_gas();
  for (auto _ : state) benchmark::DoNotOptimize(run_cycle(m, carnot_cycle(m, 0.9, 0.4, 0.1, 0.8)));
}
BENCHMARK(BM_CarnotCycle);

}  // namespace

BENCHMARK_MAIN();
