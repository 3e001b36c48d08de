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

#include "tiltalloc/types.hpp"

namespace tiltalloc {

// Below this |cos(pitch)| the Euler chart is abandoned.
inline constexpr double kPitchSingularityTol = 1e-6;

struct PlatformDerivative {
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  Vec3 attitude_rate = Vec3::Zero();
  Vec3 attitude_accel = Vec3::Zero();
};

/// Newton-Euler rigid-body dynamics driven by a body-frame wrench,
/// expressed in Euler-rate coordinates:
///   m a = R_wb f - m g e3
///   J domega = tau - omega x J omega,  omega = W(euler) euler_rate
/// Throws KinematicSingularity when |cos(pitch)| < kPitchSingularityTol.
PlatformDerivative platform_dynamics(const PlatformState& state,
                                     const Wrench& wrench,
                                     const PlatformParams& params);

}  // namespace tiltalloc
