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

#include "tiltalloc/controller.hpp"

#include <cmath>

#include "tiltalloc/errors.hpp"
#include "tiltalloc/euler.hpp"
#include "tiltalloc/platform.hpp"

namespace tiltalloc {

TrackingErrors tracking_errors(const PlatformState& state,
                               const ReferenceSample& ref) {
  return TrackingErrors{
      ref.position - state.position,
      ref.velocity - state.velocity,
      ref.attitude - state.attitude,
      ref.attitude_rate - state.attitude_rate,
  };
}

Wrench wrench_command(const PlatformState& state, const ReferenceSample& ref,
                      const ControllerGains& gains,
                      const PlatformParams& params) {
  if (std::abs(std::cos(state.attitude[1])) < kPitchSingularityTol) {
    throw KinematicSingularity("wrench command undefined at pitch +/-pi/2");
  }

  const TrackingErrors e = tracking_errors(state, ref);
  const Mat3 r_wb = rotation_wb(state.attitude);

  Wrench cmd;
  cmd.force = params.mass * r_wb.transpose() *
              (ref.acceleration + gains.kd_pos.asDiagonal() * e.velocity +
               gains.kp_pos.asDiagonal() * e.position +
               Vec3(0.0, 0.0, params.gravity));

  const Mat3 w = euler_rate_matrix(state.attitude);
  const Mat3 w_dot = euler_rate_matrix_dot(state.attitude, state.attitude_rate);
  const Vec3 omega = w * state.attitude_rate;
  cmd.torque = params.inertia * w *
                   (ref.attitude_accel + gains.kd_att.asDiagonal() * e.attitude_rate +
                    gains.kp_att.asDiagonal() * e.attitude) +
               params.inertia * w_dot * state.attitude_rate +
               omega.cross(params.inertia * omega);
  return cmd;
}

Wrench WrenchDerivativeEstimator::update(const Wrench& command, double dt) {
  const Vec6 current = command.vector();
  Wrench rate;
  if (previous_ && dt > 0.0) {
    rate = Wrench::from_vector((current - *previous_) / dt);
  }
  previous_ = current;
  return rate;
}

}  // namespace tiltalloc
