// Copyright 2026 The macroq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "macroq/fock_oracle.hpp"
#include "macroq/grid_oracle.hpp"
#include "macroq/measures.hpp"
#include "macroq/states.hpp"

namespace {

using namespace macroq;

void BM_BuildRhoM(benchmark::State& state) {
  const double v = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_M(v, 1.0));
}
BENCHMARK(BM_BuildRhoM)->Arg(3)->Arg(100)->Arg(10000);

void BM_ClosedFormReport(benchmark::State& state) {
  const WignerRep r = rho_M(static_cast<double>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(report(r));
}
BENCHMARK(BM_ClosedFormReport)->Arg(3)->Arg(100)->Arg(10000);

void BM_ClosedFormFock(benchmark::State& state) {
  const WignerRep r = fock(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(report(r));
}
BENCHMARK(BM_ClosedFormFock)->Arg(1)->Arg(3)->Arg(5);

void BM_GridMeasures(benchmark::State& state) {
  const WignerRep r = rho_M(static_cast<double>(state.range(0)), 1.0);
  const GridSpec g = auto_grid(r);
  state.counters["points"] = g.points;
  for (auto _ : state) benchmark::DoNotOptimize(grid_measures(r, g));
}
BENCHMARK(BM_GridMeasures)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_FockStateMatrix(benchmark::State& state) {
  const StateSpec spec{RhoMSpec{3.0, 1.0}};
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock_state_matrix(spec, n_max));
}
BENCHMARK(BM_FockStateMatrix)->Arg(64)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_FockPuritySlope(benchmark::State& state) {
  const FockMatrix m = fock_state_matrix({RhoMSpec{3.0, 1.0}}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fock_purity_and_slope(m));
}
BENCHMARK(BM_FockPuritySlope)->Arg(64)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
