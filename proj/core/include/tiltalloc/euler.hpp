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

Mat3 rot_x(double angle);
Mat3 rot_y(double angle);
Mat3 rot_z(double angle);

/// World-from-body rotation for roll-pitch-yaw angles,
/// R = Rz(yaw) * Ry(pitch) * Rx(roll).
Mat3 rotation_wb(const Vec3& euler);

/// Body angular velocity map W with omega_body = W(euler) * euler_rate.
/// Singular at pitch = +/- pi/2 (det W = cos(pitch)).
Mat3 euler_rate_matrix(const Vec3& euler);

/// Time derivative of W along (euler, euler_rate).
Mat3 euler_rate_matrix_dot(const Vec3& euler, const Vec3& euler_rate);

}  // namespace tiltalloc
