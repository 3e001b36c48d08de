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

#include "tiltalloc/allocator.hpp"

#include "tiltalloc/actuation.hpp"
#include "tiltalloc/pseudoinverse.hpp"

namespace tiltalloc {

Wrench command_filter(const Wrench& u_star, const Wrench& u_star_dot,
                      const Wrench& u_v, const AllocatorParams& params) {
  // B^-1 (u_star_dot - A u_star) with A = -gamma_p I, B = gamma_p I,
  // minus the stabilizing feedback on the wrench error.
  const Vec6 feedforward = u_star.vector() + u_star_dot.vector() / params.gamma_p;
  const Vec6 error = u_v.vector() - u_star.vector();
  return Wrench::from_vector(feedforward -
                             params.k_diag.asDiagonal() * error);
}

AllocatorOutput allocator_step(const ActuatorState& state, const Wrench& u_star,
                               const Wrench& u_star_dot,
                               const SaturationBox& box,
                               const PropellerSet& props,
                               const AllocatorParams& params) {
  AllocatorOutput out;
  AllocatorDiagnostics& diag = out.diag;

  const WrenchAndJacobian map = wrench_and_jacobian(state, box, props);
  diag.produced_wrench = map.wrench;
  diag.filtered_command =
      command_filter(u_star, u_star_dot, diag.produced_wrench, params);
  diag.saturation_mask = saturation_mask(state, box);
  diag.objective = objective_value(state, box, params.objective);

  const Vec18 gate = sat_gradient(state, box, params.sat_epsilon);
  const Mat6x18 gated_jacobian = map.jacobian * gate.asDiagonal();

  const auto pinv = right_pseudoinverse(gated_jacobian);
  diag.sigma_min = pinv.sigma_min;
  diag.damped = pinv.damped;

  const Vec6 wrench_error =
      diag.filtered_command.vector() - diag.produced_wrench.vector();
  diag.u_y = params.gamma_p * (pinv.pinv * wrench_error);

  if (params.gamma_j != 0.0) {
    // (I - M^+ M) v applied as two mat-vecs; the 18x18 projector is never
    // formed here.
    const Vec18 descent =
        gate.asDiagonal() * objective_gradient(state, box, params.objective);
    diag.u_j =
        params.gamma_j * (descent - pinv.pinv * (gated_jacobian * descent));
  }

  out.u_a = diag.u_y - diag.u_j;
  return out;
}

}  // namespace tiltalloc
