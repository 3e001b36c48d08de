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

#include "test_support.hpp"
#include "tiltalloc/errors.hpp"
#include "tiltalloc/euler.hpp"
#include "tiltalloc/integrate.hpp"
#include "tiltalloc/platform.hpp"

using namespace tiltalloc;

namespace {

PlatformParams stock_params() { return test::stock().platform; }

}  // namespace

TEST_CASE("hover wrench at rest holds the platform still") {
  const PlatformParams params = stock_params();
  PlatformState state;
  Wrench hover;
  hover.force = Vec3(0, 0, params.mass * params.gravity);
  const PlatformDerivative d = platform_dynamics(state, hover, params);
  CHECK(d.velocity.norm() == 0.0);
  CHECK(d.acceleration.norm() < 1e-15);
  CHECK(d.attitude_rate.norm() == 0.0);
  CHECK(d.attitude_accel.norm() < 1e-15);
}

TEST_CASE("zero wrench at rest is free fall") {
  const PlatformDerivative d =
      platform_dynamics(PlatformState{}, Wrench{}, stock_params());
  CHECK((d.acceleration - Vec3(0, 0, -9.81)).norm() < 1e-15);
}

TEST_CASE("pure yaw torque spins up at tau/Jzz") {
  const PlatformParams params = stock_params();
  Wrench w;
  w.torque = Vec3(0, 0, 0.04);
  const PlatformDerivative d = platform_dynamics(PlatformState{}, w, params);
  CHECK(d.attitude_accel[0] == doctest::Approx(0.0));
  CHECK(d.attitude_accel[1] == doctest::Approx(0.0));
  CHECK(d.attitude_accel[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pitch near pi/2 raises KinematicSingularity") {
  PlatformState state;
  state.attitude = Vec3(0, M_PI / 2, 0);
  CHECK_THROWS_AS(platform_dynamics(state, Wrench{}, stock_params()),
                  KinematicSingularity);
}

TEST_CASE("free-fall velocity equals -g t under integration") {
  const PlatformParams params = stock_params();
  using Vec12 = Eigen::Matrix<double, 12, 1>;
  const auto rhs = [&](double, const Vec12& y) {
    PlatformState s;
    s.position = y.segment<3>(0);
    s.velocity = y.segment<3>(3);
    s.attitude = y.segment<3>(6);
    s.attitude_rate = y.segment<3>(9);
    const PlatformDerivative d = platform_dynamics(s, Wrench{}, params);
    Vec12 dy;
    dy << d.velocity, d.acceleration, d.attitude_rate, d.attitude_accel;
    return dy;
  };
  Vec12 y = Vec12::Zero();
  const double dt = 1e-3;
  for (int n = 0; n < 1000; ++n) y = rk4_step(rhs, y, n * dt, dt);
  CHECK(y[5] == doctest::Approx(-9.81 * 1.0).epsilon(1e-12));
  CHECK(y[2] == doctest::Approx(-0.5 * 9.81).epsilon(1e-12));
}

TEST_CASE("Euler chart agrees with body-rate integration over one step") {
  // The same rigid body integrated in (euler, euler_rate) and in
  // (euler, omega) coordinates must land on the same state.
  const PlatformParams params = stock_params();
  auto gen = test::rng(23u);

  for (int k = 0; k < 10; ++k) {
    PlatformState s0;
    s0.attitude = test::random_vec3(gen, 0.5);
    s0.attitude_rate = test::random_vec3(gen, 0.5);
    Wrench w;
    w.torque = test::random_vec3(gen, 0.05);

    // Chart A: euler-rate coordinates via platform_dynamics.
    using Vec6s = Eigen::Matrix<double, 6, 1>;
    const auto rhs_chart = [&](double, const Vec6s& y) {
      PlatformState s;
      s.attitude = y.head<3>();
      s.attitude_rate = y.tail<3>();
      const PlatformDerivative d = platform_dynamics(s, w, params);
      Vec6s dy;
      dy << d.attitude_rate, d.attitude_accel;
      return dy;
    };
    // Chart B: body-rate coordinates, converted back afterwards.
    const auto rhs_body = [&](double, const Vec6s& y) {
      const Vec3 euler = y.head<3>();
      const Vec3 omega = y.tail<3>();
      Vec6s dy;
      dy.head<3>() = euler_rate_matrix(euler).inverse() * omega;
      dy.tail<3>() = params.inertia.inverse() *
                     (w.torque - omega.cross(params.inertia * omega));
      return dy;
    };

    const double h = 1e-3;
    Vec6s ya;
    ya << s0.attitude, s0.attitude_rate;
    ya = rk4_step(rhs_chart, ya, 0.0, h);

    Vec6s yb;
    yb << s0.attitude, euler_rate_matrix(s0.attitude) * s0.attitude_rate;
    yb = rk4_step(rhs_body, yb, 0.0, h);
    const Vec3 rate_b = euler_rate_matrix(yb.head<3>()).inverse() * yb.tail<3>();

    CHECK((ya.head<3>() - yb.head<3>()).norm() < 1e-9);
    CHECK((ya.tail<3>() - rate_b).norm() < 1e-9);
  }
}
