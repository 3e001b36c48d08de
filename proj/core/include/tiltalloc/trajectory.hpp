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

/// Analytic references with exact derivatives. The circle is
///   p_d(t) = (r cos(c t), r sin(c t), z0),  attitude_d const;
/// a hover is a degenerate circle (r = 0) pinned at a point, and a step
/// jumps between two hover points at step_time (derivatives zero, for
/// stress tests only).
struct ReferenceTrajectory {
  enum class Kind { Circle, Hover, Step };

  Kind kind = Kind::Hover;
  double radius = 0.0;        // [m]
  double angular_rate = 0.0;  // [rad/s]
  double altitude = 0.0;      // [m]
  Vec3 attitude = Vec3::Zero();

  Vec3 hover_position = Vec3::Zero();
  Vec3 step_target = Vec3::Zero();
  double step_time = 0.0;

  ReferenceSample sample(double t) const;

  static ReferenceTrajectory circle(double radius, double angular_rate,
                                    double altitude = 0.0);
  static ReferenceTrajectory hover(const Vec3& position);
  static ReferenceTrajectory step(const Vec3& from, const Vec3& to,
                                  double step_time);
};

}  // namespace tiltalloc
