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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tiltalloc/trajectory.hpp"

using namespace tiltalloc;

TEST_CASE("circle sample at t=0") {
  const auto traj = ReferenceTrajectory::circle(2.0, 0.8);
  const ReferenceSample s = traj.sample(0.0);
  CHECK((s.position - Vec3(2, 0, 0)).norm() < 1e-15);
  CHECK((s.velocity - Vec3(0, 1.6, 0)).norm() < 1e-15);
  CHECK((s.acceleration - Vec3(-1.28, 0, 0)).norm() < 1e-15);
  CHECK(s.attitude.norm() == 0.0);
}

TEST_CASE("zero-radius circle degenerates to hover") {
  const auto traj = ReferenceTrajectory::circle(0.0, 0.8, 1.5);
  for (double t : {0.0, 1.0, 7.3}) {
    const ReferenceSample s = traj.sample(t);
    CHECK((s.position - Vec3(0, 0, 1.5)).norm() == 0.0);
    CHECK(s.velocity.norm() == 0.0);
    CHECK(s.acceleration.norm() == 0.0);
  }
}

TEST_CASE("circle is periodic") {
  const auto traj = ReferenceTrajectory::circle(2.0, 0.8);
  const double period = 2.0 * M_PI / 0.8;
  const ReferenceSample a = traj.sample(0.0);
  const ReferenceSample b = traj.sample(period);
  CHECK((a.position - b.position).norm() < 1e-12);
  CHECK((a.velocity - b.velocity).norm() < 1e-12);
  CHECK((a.acceleration - b.acceleration).norm() < 1e-12);
}

TEST_CASE("circle radius is preserved") {
  const auto traj = ReferenceTrajectory::circle(2.0, 0.8);
  for (double t = 0.0; t < 10.0; t += 0.37) {
    CHECK(traj.sample(t).position.norm() == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("analytic derivatives match central differences") {
  const auto traj = ReferenceTrajectory::circle(2.0, 0.8);
  const double h = 1e-5;
  for (double t : {0.1, 1.7, 4.9, 11.3}) {
    const Vec3 fd_vel =
        (traj.sample(t + h).position - traj.sample(t - h).position) / (2 * h);
    const Vec3 fd_acc =
        (traj.sample(t + h).velocity - traj.sample(t - h).velocity) / (2 * h);
    CHECK((traj.sample(t).velocity - fd_vel).norm() < 1e-8);
    CHECK((traj.sample(t).acceleration - fd_acc).norm() < 1e-8);
  }
}

TEST_CASE("hover and step references") {
  const auto hover = ReferenceTrajectory::hover(Vec3(1, 2, 3));
  CHECK((hover.sample(5.0).position - Vec3(1, 2, 3)).norm() == 0.0);

  const auto step = ReferenceTrajectory::step(Vec3::Zero(), Vec3(1, 0, 0), 2.0);
  CHECK(step.sample(1.99).position[0] == 0.0);
  CHECK(step.sample(2.0).position[0] == 1.0);
  CHECK(step.sample(2.0).velocity.norm() == 0.0);
}
