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

#include "tiltalloc/types.hpp"

namespace tiltalloc {

struct PropellerPose {
  Vec3 position;  // spinning center in the body frame [m]
  Vec3 axis;      // unit spinning axis in the body frame
};

/// Position p_i = Rz(gamma_i) * l * e1 and axis
/// z_i = Rz(gamma_i) * Ry(beta_i) * Rx(alpha_i) * e3.
PropellerPose propeller_pose(const PropellerParams& prop, double alpha,
                             double beta);

/// Per-propeller body wrench. Thrust has magnitude force_coeff * omega^2
/// along +z_i regardless of spin direction; the aerodynamic drag torque is
/// -drag_coeff * omega * |omega| * z_i, its sign carried by the signed spin
/// rate. The moment arm contributes p_i x f_i.
Wrench propeller_wrench(const PropellerParams& prop, double alpha, double beta,
                        double omega);

/// Componentwise clamp of the actuator state to the box. Idempotent.
ActuatorState saturate(const ActuatorState& state, const SaturationBox& box);

/// Sum of the six propeller wrenches evaluated at sat(state).
Wrench total_wrench(const ActuatorState& state, const SaturationBox& box,
                    const PropellerSet& props);

/// Analytic 6x18 Jacobian of the total wrench with respect to the actuator
/// state, evaluated at sat(state). Columns follow the (alpha, beta, omega)
/// ordering of ActuatorState. The saturation gradient is NOT folded in; see
/// sat_gradient.
Mat6x18 wrench_jacobian(const ActuatorState& state, const SaturationBox& box,
                        const PropellerSet& props);

/// Wrench and Jacobian from one pass over the propellers; used on the hot
/// path where both are needed per integrator stage.
struct WrenchAndJacobian {
  Wrench wrench;
  Mat6x18 jacobian;
};
WrenchAndJacobian wrench_and_jacobian(const ActuatorState& state,
                                      const SaturationBox& box,
                                      const PropellerSet& props);

/// Diagonal of the regularized saturation gradient: 1 for components inside
/// their closed interval, epsilon for components strictly outside.
Vec18 sat_gradient(const ActuatorState& state, const SaturationBox& box,
                   double epsilon);

/// Bit j set when component j lies strictly outside its bounds (the clamp
/// in the output map is active).
std::uint32_t saturation_mask(const ActuatorState& state,
                              const SaturationBox& box);

}  // namespace tiltalloc
