// Serial reference versus the OpenMP kernels of the purity suites.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "magnus/engine.hpp"
#include "magnus/purity.hpp"

using namespace magnus;

namespace {

  OneRelatorPresentation const bs12 = parse_presentation("<a,b | a b a^-1 b^-2>");
  OneRelatorPresentation const tref = parse_presentation("<t,b | t^2 b^-3>");

  Execution mode(benchmark::State const& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
  }

  void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0
                       ? "serial"
                       : "parallel x" + std::to_string(omp_get_max_threads()));
  }

  void BM_PuritySuite_BS12(benchmark::State& state) {
    SuiteOptions o;
    o.execution = mode(state);
    std::size_t tested = 0;
    for (auto _ : state) {
      auto r = theorem_a_suite(bs12, {parse_symbol("b")}, 7, 7, o);
      tested += r.tested;
      benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(tested));
    label(state);
  }
  BENCHMARK(BM_PuritySuite_BS12)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

  void BM_CounterexampleTrefoil(benchmark::State& state) {
    SuiteOptions o;
    o.execution = mode(state);
    std::size_t tested = 0;
    for (auto _ : state) {
      auto r = counterexample_search(tref, {parse_symbol("b")}, 2, 6, o);
      tested += r.tested;
      benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(tested));
    label(state);
  }
  BENCHMARK(BM_CounterexampleTrefoil)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

  void BM_AlphaSuite(benchmark::State& state) {
    for (auto _ : state) {
      auto r = alpha_subgroup_suite(parse_symbol("x"), parse_symbol("y"), 2, 3, 9,
                                    mode(state));
      benchmark::DoNotOptimize(r);
    }
    label(state);
  }
  BENCHMARK(BM_AlphaSuite)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
