#include "fairdiv/class_check.hpp"
#include "fairdiv/incentives.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/random_profiles.hpp"

#include <benchmark/benchmark.h>

using namespace fairdiv;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_BestManipulation(benchmark::State& state) {
  ProfileSampler rng(5);
  const Profile p = rng.additive_profile(SampleShape{3, 3, 8, 8, 1});
  const Mechanism rr = make_mechanism(MechanismKind::round_robin);
  const MisreportFamily family = MisreportFamily::all_orders(p.goods());
  for (auto _ : state) benchmark::DoNotOptimize(best_manipulation(rr, p, 0, family, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::serial ? "serial" : "parallel");
}

void BM_CheckSubmodular(benchmark::State& state) {
  const HardInstance inst = submodular_hard_instance(2, 2, 8);
  const Valuation& v = inst.profile.valuation(1);
  for (auto _ : state) benchmark::DoNotOptimize(check_class(v, ValuationClass::submodular, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::serial ? "serial" : "parallel");
}

void BM_CheckCancelable(benchmark::State& state) {
  ProfileSampler rng(6);
  const Valuation v = rng.coverage(10, 12);
  for (auto _ : state) benchmark::DoNotOptimize(check_class(v, ValuationClass::cancelable, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_BestManipulation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSubmodular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckCancelable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
