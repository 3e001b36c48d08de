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

#include "tiltalloc/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "tiltalloc/actuation.hpp"

namespace tiltalloc {

void Scenario::validate() const {
  auto fail = [this](const std::string& what) {
    throw std::invalid_argument("scenario '" + name + "': " + what);
  };
  if (platform.mass <= 0.0) fail("mass must be positive");
  if (platform.gravity < 0.0) fail("gravity must be non-negative");
  if (!platform.inertia.isApprox(platform.inertia.transpose(), 1e-12) ||
      platform.inertia.determinant() <= 0.0) {
    fail("inertia tensor must be symmetric positive definite");
  }
  for (const auto& prop : propellers) {
    if (prop.arm_length <= 0.0 || prop.force_coeff <= 0.0 ||
        prop.drag_coeff <= 0.0) {
      fail("propeller geometry/coefficients must be positive");
    }
    if (prop.spin_sign != 1 && prop.spin_sign != -1) fail("spin sign must be +/-1");
  }
  if (!box.valid()) fail("saturation bounds must satisfy lower < upper");
  if ((gains.kp_pos.array() <= 0.0).any() || (gains.kd_pos.array() <= 0.0).any() ||
      (gains.kp_att.array() <= 0.0).any() || (gains.kd_att.array() <= 0.0).any()) {
    fail("controller gains must be positive");
  }
  if (allocator.gamma_p <= 0.0) fail("gamma_p must be positive");
  if (allocator.gamma_j < 0.0) fail("gamma_j must be non-negative");
  if ((allocator.k_diag.array() <= -1.0).any()) {
    fail("allocator gain K must keep -gamma_p (I + K) Hurwitz (k > -1)");
  }
  if (allocator.sat_epsilon <= 0.0) fail("saturation-gradient epsilon must be positive");
  if (allocator.objective.alpha_exponent < 2 ||
      allocator.objective.alpha_exponent % 2 != 0 ||
      allocator.objective.beta_exponent < 2 ||
      allocator.objective.beta_exponent % 2 != 0) {
    fail("objective exponents must be even and >= 2");
  }
  if (allocator.objective.mu_alpha <= 0.0 || allocator.objective.mu_beta <= 0.0 ||
      allocator.objective.mu_omega <= 0.0) {
    fail("objective weights must be positive");
  }
  if (trajectory.kind == ReferenceTrajectory::Kind::Circle && trajectory.radius < 0.0) {
    fail("circle radius must be non-negative");
  }
  if (dt <= 0.0) fail("dt must be positive");
  if (substeps < 1) fail("substeps must be at least 1");
  if (duration < 0.0) fail("duration must be non-negative");
  if (duration > 0.0 && duration < dt) fail("duration must be at least one step");
  if (!box.contains(initial_actuators.x)) {
    fail("initial actuator state must be admissible");
  }
  if (!initial_platform.all_finite()) fail("initial platform state must be finite");
}

double hover_spin_rate(const PlatformParams& platform,
                       const PropellerParams& prop) {
  return std::sqrt(platform.mass * platform.gravity /
                   (kNumPropellers * prop.force_coeff));
}

ActuatorState hover_actuators(const PlatformParams& platform,
                              const PropellerSet& props) {
  ActuatorState state;
  for (int i = 0; i < kNumPropellers; ++i) {
    state.omega(i) = props[i].spin_sign * hover_spin_rate(platform, props[i]);
  }
  return state;
}

namespace {

Scenario make_base_scenario() {
  Scenario s;
  s.platform.mass = 2.0;
  s.platform.inertia = Vec3(0.0217, 0.0217, 0.04).asDiagonal();
  s.platform.gravity = 9.81;
  s.propellers = star_hexarotor_propellers(0.246, 8.59e-6, 1.37e-7);
  s.box = make_saturation_box(deg_to_rad(30.0), 100.0, 1000.0, s.propellers);
  s.gains = ControllerGains{};
  s.allocator = AllocatorParams{};
  s.initial_actuators = hover_actuators(s.platform, s.propellers);
  return s;
}

}  // namespace

Scenario make_hover_scenario(double duration) {
  Scenario s = make_base_scenario();
  s.name = "hover";
  s.trajectory = ReferenceTrajectory::hover(Vec3::Zero());
  s.initial_platform = PlatformState{};
  s.duration = duration;
  // Hover starts on the constrained optimum and never excites the fast
  // null-space mode, so the fine transient grid is unnecessary.
  s.substeps = 20;
  return s;
}

Scenario make_circle_scenario(double gamma_j, ObjectiveKind objective,
                              double duration) {
  Scenario s = make_base_scenario();
  s.name = "circle";
  s.allocator.gamma_j = gamma_j;
  s.allocator.objective = make_objective(objective);
  s.trajectory = ReferenceTrajectory::circle(2.0, 0.8);
  s.initial_platform.position = s.trajectory.sample(0.0).position;
  s.duration = duration;
  return s;
}

Scenario make_tilt_stress_scenario(double tilt_limit_deg, double duration) {
  Scenario s = make_circle_scenario(10.0, ObjectiveKind::Symmetric, duration);
  s.name = "tilt_stress";
  s.box = make_saturation_box(deg_to_rad(tilt_limit_deg), 100.0, 1000.0,
                              s.propellers);
  return s;
}

}  // namespace tiltalloc
