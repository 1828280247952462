// Serial reference against the OpenMP kernels on the witness sweeps and the
// parameter search.

#include "qreider/criteria.hpp"
#include "qreider/hirzebruch.hpp"
#include "qreider/witness_search.hpp"

#include <benchmark/benchmark.h>

using namespace qreider;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

// A tangent sweep that never accepts, so every grid point is evaluated.
void BM_SweepDiscExhaustive(benchmark::State& state) {
  SearchOptions opts;
  opts.execution = mode(state);
  opts.grid_depth = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto hit = sweep_disc(Rational(1, 2), Rational(1, 3), Rational(40), opts, [](const Rational& x, const Rational& y) {
      return tangent_beta1_bound(Rational(1, 2), x, y) > 100;
    });
    benchmark::DoNotOptimize(hit);
  }
}

void BM_TangentWitness(benchmark::State& state) {
  SearchOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) {
    auto w = tangent_witness(Rational(1, 3), Rational(1, 5), Rational(97, 10), Rational(17, 10), Rational(33, 10), opts);
    benchmark::DoNotOptimize(w);
  }
}

void BM_ClaimSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto model = hirzebruch_model(n);
  const auto family = hirzebruch_family(model, n + 1, "B'");
  const Goal goal{GoalKind::separation, {"p_off", "q_off"}, {}, std::nullopt};
  Schedule schedule{2, 24, mode(state)};
  SearchOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) {
    auto r = search_params(family, model.cone, goal, schedule, opts);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_SweepDiscExhaustive)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TangentWitness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClaimSearch)->ArgsProduct({{0, 1}, {1, 5}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
