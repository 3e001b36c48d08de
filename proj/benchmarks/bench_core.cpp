// Copyright 2026 The tiltalloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "tiltalloc/actuation.hpp"
#include "tiltalloc/allocator.hpp"
#include "tiltalloc/analysis.hpp"
#include "tiltalloc/pseudoinverse.hpp"
#include "tiltalloc/scenario.hpp"
#include "tiltalloc/simulation.hpp"

namespace {

using namespace tiltalloc;

const Scenario& circle() {
  static const Scenario s = make_circle_scenario(10.0);
  return s;
}

ActuatorState tilted_state() {
  ActuatorState x = circle().initial_actuators;
  for (int i = 0; i < kNumPropellers; ++i) {
    x.alpha(i) = 0.1 - 0.02 * i;
    x.beta(i) = -0.08 + 0.03 * i;
  }
  return x;
}

void BM_TotalWrench(benchmark::State& state) {
  const Scenario& s = circle();
  const ActuatorState x = tilted_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_wrench(x, s.box, s.propellers));
  }
}
BENCHMARK(BM_TotalWrench);

void BM_WrenchJacobian(benchmark::State& state) {
  const Scenario& s = circle();
  const ActuatorState x = tilted_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrench_jacobian(x, s.box, s.propellers));
  }
}
BENCHMARK(BM_WrenchJacobian);

void BM_RightPseudoinverse(benchmark::State& state) {
  const Scenario& s = circle();
  const Mat6x18 m = wrench_jacobian(tilted_state(), s.box, s.propellers);
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_pseudoinverse(m));
  }
}
BENCHMARK(BM_RightPseudoinverse);

void BM_AllocatorStep(benchmark::State& state) {
  const Scenario& s = circle();
  const ActuatorState x = tilted_state();
  const Wrench u_star = total_wrench(s.initial_actuators, s.box, s.propellers);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        allocator_step(x, u_star, Wrench{}, s.box, s.propellers, s.allocator));
  }
}
BENCHMARK(BM_AllocatorStep);

void BM_SimulationSecond(benchmark::State& state) {
  Scenario s = make_circle_scenario(10.0, ObjectiveKind::Symmetric, 1.0);
  s.substeps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(s));
  }
}
BENCHMARK(BM_SimulationSecond)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CosineFit(benchmark::State& state) {
  std::vector<double> t, x;
  for (int k = 0; k <= 20000; ++k) {
    t.push_back(k * 1e-3);
    x.push_back(0.13 * std::cos(0.8 * k * 1e-3 + 0.4) + 0.01);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cosine_fit(t, x, 0.8));
  }
}
BENCHMARK(BM_CosineFit);

}  // namespace

BENCHMARK_MAIN();
