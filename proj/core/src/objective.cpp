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

#include "tiltalloc/objective.hpp"

#include <cmath>

#include "tiltalloc/actuation.hpp"

namespace tiltalloc {

ObjectiveSpec make_objective(ObjectiveKind kind, double mu_alpha,
                             double mu_beta, double mu_omega) {
  ObjectiveSpec spec;
  spec.mu_alpha = mu_alpha;
  spec.mu_beta = mu_beta;
  spec.mu_omega = mu_omega;
  switch (kind) {
    case ObjectiveKind::Symmetric:
      break;
    case ObjectiveKind::AlphaConstrained:
      spec.alpha_exponent = 2;
      break;
    case ObjectiveKind::BetaConstrained:
      spec.beta_exponent = 2;
      break;
  }
  return spec;
}

namespace {

double int_pow(double base, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= base;
  return r;
}

}  // namespace

double objective_value(const ActuatorState& state, const SaturationBox& box,
                       const ObjectiveSpec& spec) {
  const ActuatorState s = saturate(state, box);
  double value = 0.0;
  for (int i = 0; i < kNumPropellers; ++i) {
    const int ai = ActuatorState::alpha_index(i);
    const int bi = ActuatorState::beta_index(i);
    const double na = (s.x[ai] - box.midpoint(ai)) / box.width(ai);
    const double nb = (s.x[bi] - box.midpoint(bi)) / box.width(bi);
    value += spec.mu_alpha * int_pow(na, spec.alpha_exponent);
    value += spec.mu_beta * int_pow(nb, spec.beta_exponent);
    value += spec.mu_omega * s.omega(i) * s.omega(i);
  }
  return value;
}

Vec18 objective_gradient(const ActuatorState& state, const SaturationBox& box,
                         const ObjectiveSpec& spec) {
  const ActuatorState s = saturate(state, box);
  Vec18 grad = Vec18::Zero();
  for (int i = 0; i < kNumPropellers; ++i) {
    const int ai = ActuatorState::alpha_index(i);
    const int bi = ActuatorState::beta_index(i);
    const int oi = ActuatorState::omega_index(i);
    // d/dx mu (x~/w)^n = n mu x~^(n-1) / w^n
    grad[ai] = spec.alpha_exponent * spec.mu_alpha *
               int_pow(s.x[ai] - box.midpoint(ai), spec.alpha_exponent - 1) /
               int_pow(box.width(ai), spec.alpha_exponent);
    grad[bi] = spec.beta_exponent * spec.mu_beta *
               int_pow(s.x[bi] - box.midpoint(bi), spec.beta_exponent - 1) /
               int_pow(box.width(bi), spec.beta_exponent);
    grad[oi] = 2.0 * spec.mu_omega * s.omega(i);
  }
  return grad;
}

}  // namespace tiltalloc
