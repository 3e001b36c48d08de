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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiltalloc/controller.hpp"
#include "tiltalloc/scenario.hpp"
#include "tiltalloc/types.hpp"

namespace tiltalloc {

enum class RunStatus { Completed, KinematicSingularityAbort, NonFiniteAbort };

std::string to_string(RunStatus status);

/// One time-grid row: the state at t together with the controller and
/// allocator quantities evaluated there.
struct StepRecord {
  double t = 0.0;
  PlatformState platform;
  ActuatorState actuators;
  Wrench u_star;            // commanded wrench
  Wrench u_star_dot;        // backward-difference command rate
  Wrench u_v;               // produced wrench h(sat(x))
  Wrench u_vc;              // filtered command
  Vec18 u_y = Vec18::Zero();
  Vec18 u_j = Vec18::Zero();
  double objective = 0.0;
  std::uint32_t saturation_mask = 0;
  double sigma_min = 0.0;
  bool damped = false;
};

struct RunRecord {
  std::string scenario_name;
  double dt = 0.0;
  RunStatus status = RunStatus::Completed;
  std::string diagnostic;
  std::vector<StepRecord> rows;
};

/// Mutable state carried across steps.
struct SimState {
  PlatformState platform;
  ActuatorState actuators;
  WrenchDerivativeEstimator estimator;
};

/// Controller + allocator evaluation at time t (advances the derivative
/// estimator; call exactly once per grid point).
StepRecord evaluate_step(const Scenario& scenario, SimState& sim, double t);

/// Joint explicit RK4 integration of (platform, actuators) over [t, t+dt],
/// split into scenario.substeps internal steps. The high-level command
/// (u_star, u_star_dot) is held over the interval; the allocation law is
/// state feedback and is re-evaluated at every integrator stage, since its
/// null-space descent can be much faster than the control period. The
/// integrated actuator state is deliberately not clamped: saturation lives
/// in the output map only.
void advance_step(const Scenario& scenario, SimState& sim, const Wrench& u_star,
                  const Wrench& u_star_dot, double t);

/// Fixed-step closed-loop run; floor(duration/dt)+1 rows on a uniform grid.
/// Deterministic: identical scenarios produce identical records. Aborts
/// (kinematic singularity, non-finite state) return the partial record with
/// a diagnostic instead of throwing.
RunRecord run(const Scenario& scenario);

}  // namespace tiltalloc
