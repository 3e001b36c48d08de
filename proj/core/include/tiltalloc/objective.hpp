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

/// Box-centered actuator objective
///   J(x) = sum_i mu_a ((alpha_i - alpha_m)/dalpha)^na
///        + mu_b ((beta_i - beta_m)/dbeta)^nb + mu_w omega_i^2
/// with midpoints/widths taken from the saturation box. Exponents are even;
/// the symmetric form uses (6, 6), the constrained variants flatten one tilt
/// family to exponent 2, which steepens its gradient near the center.
struct ObjectiveSpec {
  int alpha_exponent = 6;
  int beta_exponent = 6;
  double mu_alpha = 750.0;
  double mu_beta = 750.0;
  double mu_omega = 1.0 / 200.0;
};

enum class ObjectiveKind { Symmetric, AlphaConstrained, BetaConstrained };

/// Exponent pairs: Symmetric (6,6), AlphaConstrained (2,6),
/// BetaConstrained (6,2).
ObjectiveSpec make_objective(ObjectiveKind kind, double mu_alpha = 750.0,
                             double mu_beta = 750.0,
                             double mu_omega = 1.0 / 200.0);

/// J evaluated at sat(state).
double objective_value(const ActuatorState& state, const SaturationBox& box,
                       const ObjectiveSpec& spec);

/// Closed-form gradient of J, evaluated at sat(state).
Vec18 objective_gradient(const ActuatorState& state, const SaturationBox& box,
                         const ObjectiveSpec& spec);

}  // namespace tiltalloc
