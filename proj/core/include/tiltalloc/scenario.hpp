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

#include <string>

#include "tiltalloc/allocator.hpp"
#include "tiltalloc/trajectory.hpp"
#include "tiltalloc/types.hpp"

namespace tiltalloc {

/// Everything needed for one deterministic closed-loop run.
struct Scenario {
  std::string name = "scenario";

  PlatformParams platform;
  PropellerSet propellers;
  SaturationBox box;
  ControllerGains gains;
  AllocatorParams allocator;
  ReferenceTrajectory trajectory;

  PlatformState initial_platform;
  ActuatorState initial_actuators;

  double duration = 30.0;  // [s]
  double dt = 1e-3;        // [s] control period and record grid
  // Internal integrator substeps per control period. Near the constrained
  // optimum the null-space descent contracts at roughly
  // gamma_j * mu_omega / c_f * |d2 f_z / d tilt^2|, about 1.6e4 1/s for the
  // stock weights (and transiently a few times that), so the actuator flow
  // needs a far finer integration grid than the 1 kHz command update.
  int substeps = 40;

  /// Validates user-facing invariants (positive gains, admissible initial
  /// actuator state, stable allocator loop, dt/duration sanity). Throws
  /// std::invalid_argument with a description. Programmatic callers may
  /// build degenerate scenarios without validating.
  void validate() const;
};

/// Spin magnitude sqrt(m g / (6 c_f)) balancing gravity with level tilts.
double hover_spin_rate(const PlatformParams& platform,
                       const PropellerParams& prop);

/// Actuator state with zero tilts and hover spin, signs per spin direction.
ActuatorState hover_actuators(const PlatformParams& platform,
                              const PropellerSet& props);

/// Default 2 kg star hexarotor with the stock gain set, hovering at the
/// origin for `duration` seconds.
Scenario make_hover_scenario(double duration = 10.0);

/// Circular reference (r = 2 m, 0.8 rad/s) starting from hover on the
/// circle; gamma_j selects the strength of the null-space optimization.
Scenario make_circle_scenario(double gamma_j,
                              ObjectiveKind objective = ObjectiveKind::Symmetric,
                              double duration = 30.0);

/// Circle scenario with tilt bounds shrunk to +/-tilt_limit_deg so that the
/// tilt angles saturate; exercises the regularized saturation gradient.
Scenario make_tilt_stress_scenario(double tilt_limit_deg = 1.0,
                                   double duration = 30.0);

}  // namespace tiltalloc
