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

#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace tiltalloc {

inline constexpr int kNumPropellers = 6;
inline constexpr int kActuatorDim = 3 * kNumPropellers;

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec18 = Eigen::Matrix<double, kActuatorDim, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat6x18 = Eigen::Matrix<double, 6, kActuatorDim>;
using Mat18x6 = Eigen::Matrix<double, kActuatorDim, 6>;
using Mat18 = Eigen::Matrix<double, kActuatorDim, kActuatorDim>;

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

/// Body-frame force [N] and torque [N m] acting at the platform CoM.
struct Wrench {
  Vec3 force = Vec3::Zero();
  Vec3 torque = Vec3::Zero();

  Vec6 vector() const {
    Vec6 v;
    v << force, torque;
    return v;
  }
  static Wrench from_vector(const Vec6& v) {
    return Wrench{v.head<3>(), v.tail<3>()};
  }
  bool all_finite() const {
    return force.allFinite() && torque.allFinite();
  }
};

inline Wrench operator+(const Wrench& a, const Wrench& b) {
  return {a.force + b.force, a.torque + b.torque};
}
inline Wrench operator-(const Wrench& a, const Wrench& b) {
  return {a.force - b.force, a.torque - b.torque};
}
inline Wrench operator*(double s, const Wrench& w) {
  return {s * w.force, s * w.torque};
}

/// Fixed per-propeller geometry and aerodynamic coefficients.
///
/// `spin_sign` is +1 for counter-clockwise propellers and -1 for clockwise
/// ones; the signed spin rate in ActuatorState carries the same sign.
struct PropellerParams {
  int index = 1;              // 1-based, matches the arm numbering
  double arm_angle = 0.0;     // [rad] arm direction in the body x-y plane
  double arm_length = 0.246;  // [m]
  double force_coeff = 8.59e-6;   // [N s^2]
  double drag_coeff = 1.37e-7;    // [N m s^2]
  int spin_sign = +1;
};

using PropellerSet = std::array<PropellerParams, kNumPropellers>;

/// Star-shaped layout: arm i at (i-1)*60 deg, odd propellers spin CCW.
PropellerSet star_hexarotor_propellers(double arm_length, double force_coeff,
                                       double drag_coeff);

/// Actuator state as the 18-vector (alpha_1..6, beta_1..6, omega_1..6).
///
/// alpha_i is the cant angle about the arm axis, beta_i the dihedral angle
/// about the axis orthogonal to the arm, omega_i the signed spin rate.
/// All Jacobians and saturation boxes follow this component ordering.
struct ActuatorState {
  Vec18 x = Vec18::Zero();

  static constexpr int alpha_index(int i) { return i; }
  static constexpr int beta_index(int i) { return kNumPropellers + i; }
  static constexpr int omega_index(int i) { return 2 * kNumPropellers + i; }

  double alpha(int i) const { return x[alpha_index(i)]; }
  double beta(int i) const { return x[beta_index(i)]; }
  double omega(int i) const { return x[omega_index(i)]; }

  double& alpha(int i) { return x[alpha_index(i)]; }
  double& beta(int i) { return x[beta_index(i)]; }
  double& omega(int i) { return x[omega_index(i)]; }
};

/// Componentwise lower/upper bounds on the actuator state.
struct SaturationBox {
  Vec18 lower = Vec18::Constant(-1.0);
  Vec18 upper = Vec18::Constant(1.0);

  double midpoint(int j) const { return 0.5 * (upper[j] + lower[j]); }
  double width(int j) const { return upper[j] - lower[j]; }
  bool contains(const Vec18& x) const {
    return (x.array() >= lower.array()).all() &&
           (x.array() <= upper.array()).all();
  }
  bool valid() const { return (lower.array() < upper.array()).all(); }
};

/// Tilt bounds of +/- tilt_limit on every cant/dihedral angle; spin bounds
/// [spin_min, spin_max] in magnitude, signed per propeller spin direction.
SaturationBox make_saturation_box(double tilt_limit, double spin_min,
                                  double spin_max, const PropellerSet& props);

struct PlatformParams {
  double mass = 2.0;                     // [kg]
  Mat3 inertia = Mat3::Identity();       // [kg m^2]
  double gravity = 9.81;                 // [m/s^2]
};

/// CoM position/velocity in the world frame plus roll-pitch-yaw Euler
/// angles and their rates.
struct PlatformState {
  Vec3 position = Vec3::Zero();       // [m]
  Vec3 velocity = Vec3::Zero();       // [m/s]
  Vec3 attitude = Vec3::Zero();       // (roll, pitch, yaw) [rad]
  Vec3 attitude_rate = Vec3::Zero();  // [rad/s]

  bool all_finite() const {
    return position.allFinite() && velocity.allFinite() &&
           attitude.allFinite() && attitude_rate.allFinite();
  }
};

/// Diagonal PD gains for the position and attitude loops.
struct ControllerGains {
  Vec3 kp_pos = Vec3::Constant(2.0);
  Vec3 kd_pos = Vec3::Constant(1.5);
  Vec3 kp_att = Vec3::Constant(2.0);
  Vec3 kd_att = Vec3::Constant(1.5);
};

/// Desired position/attitude with first and second derivatives at time t.
struct ReferenceSample {
  double t = 0.0;
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  Vec3 acceleration = Vec3::Zero();
  Vec3 attitude = Vec3::Zero();
  Vec3 attitude_rate = Vec3::Zero();
  Vec3 attitude_accel = Vec3::Zero();
};

}  // namespace tiltalloc
