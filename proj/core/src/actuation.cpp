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

#include "tiltalloc/actuation.hpp"

#include <cmath>
#include <cstdint>

#include "tiltalloc/euler.hpp"

namespace tiltalloc {

PropellerSet star_hexarotor_propellers(double arm_length, double force_coeff,
                                       double drag_coeff) {
  PropellerSet props;
  for (int i = 0; i < kNumPropellers; ++i) {
    props[i].index = i + 1;
    props[i].arm_angle = i * M_PI / 3.0;
    props[i].arm_length = arm_length;
    props[i].force_coeff = force_coeff;
    props[i].drag_coeff = drag_coeff;
    props[i].spin_sign = (i % 2 == 0) ? +1 : -1;  // odd-numbered props are CCW
  }
  return props;
}

SaturationBox make_saturation_box(double tilt_limit, double spin_min,
                                  double spin_max, const PropellerSet& props) {
  SaturationBox box;
  for (int i = 0; i < kNumPropellers; ++i) {
    box.lower[ActuatorState::alpha_index(i)] = -tilt_limit;
    box.upper[ActuatorState::alpha_index(i)] = tilt_limit;
    box.lower[ActuatorState::beta_index(i)] = -tilt_limit;
    box.upper[ActuatorState::beta_index(i)] = tilt_limit;
    // Signed spin interval: direction reversal is never admissible.
    if (props[i].spin_sign > 0) {
      box.lower[ActuatorState::omega_index(i)] = spin_min;
      box.upper[ActuatorState::omega_index(i)] = spin_max;
    } else {
      box.lower[ActuatorState::omega_index(i)] = -spin_max;
      box.upper[ActuatorState::omega_index(i)] = -spin_min;
    }
  }
  return box;
}

PropellerPose propeller_pose(const PropellerParams& prop, double alpha,
                             double beta) {
  const Mat3 arm = rot_z(prop.arm_angle);
  PropellerPose pose;
  pose.position = arm * Vec3(prop.arm_length, 0.0, 0.0);
  pose.axis = arm * (rot_y(beta) * (rot_x(alpha) * Vec3::UnitZ()));
  return pose;
}

Wrench propeller_wrench(const PropellerParams& prop, double alpha, double beta,
                        double omega) {
  const PropellerPose pose = propeller_pose(prop, alpha, beta);
  Wrench w;
  w.force = prop.force_coeff * omega * omega * pose.axis;
  w.torque = -prop.drag_coeff * omega * std::abs(omega) * pose.axis +
             pose.position.cross(w.force);
  return w;
}

ActuatorState saturate(const ActuatorState& state, const SaturationBox& box) {
  ActuatorState out;
  out.x = state.x.cwiseMax(box.lower).cwiseMin(box.upper);
  return out;
}

Wrench total_wrench(const ActuatorState& state, const SaturationBox& box,
                    const PropellerSet& props) {
  const ActuatorState s = saturate(state, box);
  Wrench total;
  for (int i = 0; i < kNumPropellers; ++i) {
    total = total + propeller_wrench(props[i], s.alpha(i), s.beta(i), s.omega(i));
  }
  return total;
}

namespace {

// Skew-symmetric matrix with skew(v) * u = v x u.
Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0, -v[2], v[1],
       v[2], 0, -v[0],
       -v[1], v[0], 0;
  return m;
}

}  // namespace

WrenchAndJacobian wrench_and_jacobian(const ActuatorState& state,
                                      const SaturationBox& box,
                                      const PropellerSet& props) {
  const ActuatorState s = saturate(state, box);
  WrenchAndJacobian out;
  out.jacobian.setZero();

  for (int i = 0; i < kNumPropellers; ++i) {
    const PropellerParams& prop = props[i];
    const double alpha = s.alpha(i), beta = s.beta(i), omega = s.omega(i);

    const Mat3 arm = rot_z(prop.arm_angle);
    const Vec3 p = arm * Vec3(prop.arm_length, 0.0, 0.0);
    const Mat3 p_cross = skew(p);

    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);

    const Vec3 z = arm * Vec3(sb * ca, -sa, cb * ca);
    const Vec3 dz_dalpha = arm * Vec3(-sb * sa, -ca, -cb * sa);
    const Vec3 dz_dbeta = arm * Vec3(cb * ca, 0.0, -sb * ca);

    const double thrust = prop.force_coeff * omega * omega;
    const double drag = prop.drag_coeff * omega * std::abs(omega);

    const Vec3 force = thrust * z;
    out.wrench.force += force;
    out.wrench.torque += -drag * z + p_cross * force;

    const Vec3 df_dalpha = thrust * dz_dalpha;
    const Vec3 df_dbeta = thrust * dz_dbeta;
    const Vec3 df_domega = 2.0 * prop.force_coeff * omega * z;

    const Vec3 dtau_dalpha = -drag * dz_dalpha + p_cross * df_dalpha;
    const Vec3 dtau_dbeta = -drag * dz_dbeta + p_cross * df_dbeta;
    const Vec3 dtau_domega =
        -2.0 * prop.drag_coeff * std::abs(omega) * z + p_cross * df_domega;

    const int ai = ActuatorState::alpha_index(i);
    const int bi = ActuatorState::beta_index(i);
    const int oi = ActuatorState::omega_index(i);
    out.jacobian.block<3, 1>(0, ai) = df_dalpha;
    out.jacobian.block<3, 1>(3, ai) = dtau_dalpha;
    out.jacobian.block<3, 1>(0, bi) = df_dbeta;
    out.jacobian.block<3, 1>(3, bi) = dtau_dbeta;
    out.jacobian.block<3, 1>(0, oi) = df_domega;
    out.jacobian.block<3, 1>(3, oi) = dtau_domega;
  }
  return out;
}

Mat6x18 wrench_jacobian(const ActuatorState& state, const SaturationBox& box,
                        const PropellerSet& props) {
  return wrench_and_jacobian(state, box, props).jacobian;
}

Vec18 sat_gradient(const ActuatorState& state, const SaturationBox& box,
                   double epsilon) {
  Vec18 diag;
  for (int j = 0; j < kActuatorDim; ++j) {
    const bool inside = state.x[j] >= box.lower[j] && state.x[j] <= box.upper[j];
    diag[j] = inside ? 1.0 : epsilon;
  }
  return diag;
}

std::uint32_t saturation_mask(const ActuatorState& state,
                              const SaturationBox& box) {
  std::uint32_t mask = 0;
  for (int j = 0; j < kActuatorDim; ++j) {
    if (state.x[j] < box.lower[j] || state.x[j] > box.upper[j]) {
      mask |= (1u << j);
    }
  }
  return mask;
}

}  // namespace tiltalloc
