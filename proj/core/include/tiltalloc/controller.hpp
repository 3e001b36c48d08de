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

#include <optional>

#include "tiltalloc/types.hpp"

namespace tiltalloc {

struct TrackingErrors {
  Vec3 position;       // p_d - p
  Vec3 velocity;       // v_d - v
  Vec3 attitude;       // delta_d - delta
  Vec3 attitude_rate;  // ddelta_d - ddelta
};

TrackingErrors tracking_errors(const PlatformState& state,
                               const ReferenceSample& ref);

/// PD + feedforward wrench command. Substituted into the rigid-body
/// dynamics this yields decoupled second-order error dynamics
///   e'' + Kd e' + Kp e = 0
/// per axis, for both position and attitude. The torque feedforward uses
/// the Coriolis term omega x J omega with omega = W(euler) euler_rate.
/// Throws KinematicSingularity near pitch = +/-pi/2.
Wrench wrench_command(const PlatformState& state, const ReferenceSample& ref,
                      const ControllerGains& gains,
                      const PlatformParams& params);

/// Causal backward-difference estimate of the commanded-wrench rate.
/// The first sample returns zero; exact for affine-in-time signals.
class WrenchDerivativeEstimator {
 public:
  Wrench update(const Wrench& command, double dt);
  void reset() { previous_.reset(); }

 private:
  std::optional<Vec6> previous_;
};

}  // namespace tiltalloc
