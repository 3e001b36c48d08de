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

#include "tiltalloc/objective.hpp"
#include "tiltalloc/types.hpp"

namespace tiltalloc {

/// Gains of the dynamic allocation law. The wrench-tracking loop uses
/// A = -gamma_p I, B = gamma_p I and the filter gain K (diagonal); the
/// resulting wrench-error dynamics are du~/dt = -gamma_p (I + K) u~, so the
/// loop is exponentially stable whenever every k_diag entry exceeds -1.
struct AllocatorParams {
  double gamma_p = 5.0;
  double gamma_j = 10.0;
  Vec6 k_diag = Vec6::Constant(3.0);
  double sat_epsilon = 1e-3;
  ObjectiveSpec objective;
};

/// Reference input of the wrench-tracking loop:
///   u_vc = u_star + u_star_dot / gamma_p - K (u_v - u_star).
Wrench command_filter(const Wrench& u_star, const Wrench& u_star_dot,
                      const Wrench& u_v, const AllocatorParams& params);

struct AllocatorDiagnostics {
  Wrench produced_wrench;    // u_v = h(sat(x))
  Wrench filtered_command;   // u_vc
  Vec18 u_y = Vec18::Zero();
  Vec18 u_j = Vec18::Zero();
  double objective = 0.0;    // J(sat(x))
  std::uint32_t saturation_mask = 0;
  double sigma_min = 0.0;    // smallest singular value of the gated Jacobian
  bool damped = false;       // damped pseudo-inverse fallback taken
};

struct AllocatorOutput {
  Vec18 u_a = Vec18::Zero();
  AllocatorDiagnostics diag;
};

/// One evaluation of the allocation law
///   u_a = u_y - u_j
///   u_y = gamma_p M^+ (u_vc - u_v),       M = grad h(sat(x)) grad sat(x)
///   u_j = gamma_j (M)_perp grad sat(x)^T grad J(sat(x))
/// Both terms use the same gated Jacobian M, so M u_j = 0 holds exactly up
/// to numerics. Never throws; rank problems degrade to the damped
/// pseudo-inverse and are reported in the diagnostics.
AllocatorOutput allocator_step(const ActuatorState& state, const Wrench& u_star,
                               const Wrench& u_star_dot,
                               const SaturationBox& box,
                               const PropellerSet& props,
                               const AllocatorParams& params);

}  // namespace tiltalloc
