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

#include "tiltalloc/trajectory.hpp"

#include <cmath>

namespace tiltalloc {

ReferenceSample ReferenceTrajectory::sample(double t) const {
  ReferenceSample s;
  s.t = t;
  s.attitude = attitude;
  switch (kind) {
    case Kind::Circle: {
      const double a = angular_rate * t;
      const double c = std::cos(a), sn = std::sin(a);
      s.position = Vec3(radius * c, radius * sn, altitude);
      s.velocity = Vec3(-radius * angular_rate * sn, radius * angular_rate * c, 0.0);
      s.acceleration = Vec3(-radius * angular_rate * angular_rate * c,
                            -radius * angular_rate * angular_rate * sn, 0.0);
      break;
    }
    case Kind::Hover:
      s.position = hover_position;
      break;
    case Kind::Step:
      s.position = (t < step_time) ? hover_position : step_target;
      break;
  }
  return s;
}

ReferenceTrajectory ReferenceTrajectory::circle(double radius,
                                                double angular_rate,
                                                double altitude) {
  ReferenceTrajectory traj;
  traj.kind = Kind::Circle;
  traj.radius = radius;
  traj.angular_rate = angular_rate;
  traj.altitude = altitude;
  return traj;
}

ReferenceTrajectory ReferenceTrajectory::hover(const Vec3& position) {
  ReferenceTrajectory traj;
  traj.kind = Kind::Hover;
  traj.hover_position = position;
  return traj;
}

ReferenceTrajectory ReferenceTrajectory::step(const Vec3& from, const Vec3& to,
                                              double step_time) {
  ReferenceTrajectory traj;
  traj.kind = Kind::Step;
  traj.hover_position = from;
  traj.step_target = to;
  traj.step_time = step_time;
  return traj;
}

}  // namespace tiltalloc
