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

#include "tiltalloc/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "tiltalloc/actuation.hpp"
#include "tiltalloc/errors.hpp"
#include "tiltalloc/integrate.hpp"
#include "tiltalloc/platform.hpp"

namespace tiltalloc {

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Completed:
      return "completed";
    case RunStatus::KinematicSingularityAbort:
      return "kinematic_singularity";
    case RunStatus::NonFiniteAbort:
      return "non_finite_state";
  }
  return "unknown";
}

namespace {

using Vec30 = Eigen::Matrix<double, 30, 1>;

Vec30 pack(const PlatformState& p, const ActuatorState& a) {
  Vec30 y;
  y.segment<3>(0) = p.position;
  y.segment<3>(3) = p.velocity;
  y.segment<3>(6) = p.attitude;
  y.segment<3>(9) = p.attitude_rate;
  y.segment<18>(12) = a.x;
  return y;
}

void unpack(const Vec30& y, PlatformState& p, ActuatorState& a) {
  p.position = y.segment<3>(0);
  p.velocity = y.segment<3>(3);
  p.attitude = y.segment<3>(6);
  p.attitude_rate = y.segment<3>(9);
  a.x = y.segment<18>(12);
}

}  // namespace

StepRecord evaluate_step(const Scenario& scenario, SimState& sim, double t) {
  const ReferenceSample ref = scenario.trajectory.sample(t);
  const Wrench u_star =
      wrench_command(sim.platform, ref, scenario.gains, scenario.platform);
  const Wrench u_star_dot = sim.estimator.update(u_star, scenario.dt);
  const AllocatorOutput alloc =
      allocator_step(sim.actuators, u_star, u_star_dot, scenario.box,
                     scenario.propellers, scenario.allocator);

  StepRecord row;
  row.t = t;
  row.platform = sim.platform;
  row.actuators = sim.actuators;
  row.u_star = u_star;
  row.u_star_dot = u_star_dot;
  row.u_v = alloc.diag.produced_wrench;
  row.u_vc = alloc.diag.filtered_command;
  row.u_y = alloc.diag.u_y;
  row.u_j = alloc.diag.u_j;
  row.objective = alloc.diag.objective;
  row.saturation_mask = alloc.diag.saturation_mask;
  row.sigma_min = alloc.diag.sigma_min;
  row.damped = alloc.diag.damped;
  return row;
}

void advance_step(const Scenario& scenario, SimState& sim, const Wrench& u_star,
                  const Wrench& u_star_dot, double t) {
  const auto rhs = [&](double /*stage_t*/, const Vec30& y) -> Vec30 {
    PlatformState p;
    ActuatorState a;
    unpack(y, p, a);
    const AllocatorOutput alloc =
        allocator_step(a, u_star, u_star_dot, scenario.box, scenario.propellers,
                       scenario.allocator);
    const PlatformDerivative d = platform_dynamics(
        p, alloc.diag.produced_wrench, scenario.platform);
    Vec30 dy;
    dy.segment<3>(0) = d.velocity;
    dy.segment<3>(3) = d.acceleration;
    dy.segment<3>(6) = d.attitude_rate;
    dy.segment<3>(9) = d.attitude_accel;
    dy.segment<18>(12) = alloc.u_a;
    return dy;
  };

  const int substeps = std::max(1, scenario.substeps);
  const double h = scenario.dt / substeps;
  Vec30 y = pack(sim.platform, sim.actuators);
  for (int k = 0; k < substeps; ++k) {
    y = rk4_step(rhs, y, t + k * h, h);
  }
  unpack(y, sim.platform, sim.actuators);
}

RunRecord run(const Scenario& scenario) {
  RunRecord record;
  record.scenario_name = scenario.name;
  record.dt = scenario.dt;

  const auto steps = static_cast<long>(std::floor(scenario.duration / scenario.dt));
  record.rows.reserve(steps + 1);

  SimState sim;
  sim.platform = scenario.initial_platform;
  sim.actuators = scenario.initial_actuators;

  for (long n = 0; n <= steps; ++n) {
    const double t = n * scenario.dt;
    StepRecord row;
    try {
      row = evaluate_step(scenario, sim, t);
    } catch (const KinematicSingularity& e) {
      record.status = RunStatus::KinematicSingularityAbort;
      record.diagnostic = e.what();
      return record;
    }
    record.rows.push_back(row);
    if (n == steps) break;

    try {
      advance_step(scenario, sim, row.u_star, row.u_star_dot, t);
    } catch (const KinematicSingularity& e) {
      record.status = RunStatus::KinematicSingularityAbort;
      record.diagnostic = e.what();
      return record;
    }
    if (!sim.platform.all_finite() || !sim.actuators.x.allFinite()) {
      record.status = RunStatus::NonFiniteAbort;
      record.diagnostic = "non-finite state at t=" + std::to_string(t + scenario.dt);
      return record;
    }
  }
  return record;
}

}  // namespace tiltalloc
