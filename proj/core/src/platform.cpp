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

#include "tiltalloc/platform.hpp"

#include <cmath>

#include "tiltalloc/errors.hpp"
#include "tiltalloc/euler.hpp"

namespace tiltalloc {

PlatformDerivative platform_dynamics(const PlatformState& state,
                                     const Wrench& wrench,
                                     const PlatformParams& params) {
  if (std::abs(std::cos(state.attitude[1])) < kPitchSingularityTol) {
    throw KinematicSingularity(
        "pitch reached +/-pi/2, Euler-rate kinematics not invertible (pitch=" +
        std::to_string(state.attitude[1]) + " rad)");
  }

  const Mat3 r_wb = rotation_wb(state.attitude);
  const Mat3 w = euler_rate_matrix(state.attitude);
  const Mat3 w_dot = euler_rate_matrix_dot(state.attitude, state.attitude_rate);

  PlatformDerivative d;
  d.velocity = state.velocity;
  d.acceleration = (r_wb * wrench.force) / params.mass -
                   Vec3(0.0, 0.0, params.gravity);

  const Vec3 omega = w * state.attitude_rate;
  const Vec3 omega_dot = params.inertia.inverse() *
                         (wrench.torque - omega.cross(params.inertia * omega));
  d.attitude_rate = state.attitude_rate;
  d.attitude_accel = w.inverse() * (omega_dot - w_dot * state.attitude_rate);
  return d;
}

}  // namespace tiltalloc
